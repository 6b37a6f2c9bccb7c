"""Cubic forms, 3-isogeny descent and relative Brauer groups."""

import json

from . import _core
from ._core import MathError, clifford_trials, cube_root, cyclic_descent, symbol_invariants

__all__ = ["MathError", "compute", "verify", "clifford_trials", "cube_root", "cyclic_descent", "symbol_invariants"]


def _run(fn, config):
    text = config if isinstance(config, str) else json.dumps(config)
    report, status, code = fn(text)
    return json.loads(report), status, code


def compute(config):
    """Run a job; returns (report, status, exit_code)."""
    return _run(_core.run_job, config)


def verify(config):
    """Run the Clifford identity suite for the job's form."""
    return _run(_core.run_verify, config)
