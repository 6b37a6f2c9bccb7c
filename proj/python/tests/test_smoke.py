import pytest

import cubebr


def test_ab22_over_q():
    report, status, code = cubebr.compute({"field": "Q", "form": {"a": 2, "b": 11}, "rank": 1})
    assert status == "proved" and code == 0
    q = next(s for s in report["sections"] if s["field"] == "Q")
    assert q["relative_brauer_group"]["order"] == "1"
    assert q["images"]["alpha_prime"]["lower"]["label"] == "<2, 11>"


def test_rank_mutation_is_flagged():
    _, status, code = cubebr.compute({"field": "Q", "form": {"a": 2, "b": 11}, "rank": 0})
    assert status == "inconsistent" and code == 1


def test_bad_config_raises():
    with pytest.raises(ValueError):
        cubebr.compute({"field": "Q", "form": {"a": 2}})


def test_cube_root_and_descent():
    # smallest of the three roots 2, 2 omega, 2 omega^2
    assert cubebr.cube_root("8") == ("-1", "-1")
    assert cubebr.cube_root("8", field_m=5) == ("2", "0")
    assert cubebr.cube_root("2") is None
    assert cubebr.cyclic_descent("36", "12") == ("12", "72", False)


def test_symbol_invariants_ab26():
    inv = cubebr.symbol_invariants(("3", "0"), ("13", "-26"))  # (3, p q^2)
    assert inv == {"1+2*sqrt(-3)": "1/3", "1-2*sqrt(-3)": "1/3", "sqrt(-3)": "1/3"}
    assert cubebr.symbol_invariants(("2", "0"), ("2", "0")) == {}


def test_clifford_suite():
    s = cubebr.clifford_trials(seed=3, trials=5, fields=[7, 13])
    assert s["all_pass"] and s["trials_run"] == 5
    assert s["rewriter_agree"] == s["rewriter_words"] >= 100
