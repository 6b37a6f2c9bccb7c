#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubebr {

using Int = mpz_class;
using Rat = mpq_class;

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

int sign(const Rat& x);
int sign(const Int& x);

// p-adic valuation of a nonzero integer or rational.
int valuation(const Int& n, const Int& p);
int valuation(const Rat& x, const Int& p);

Int isqrt(const Int& n);
Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);

// Exact k-th root of an integer when it exists (negative allowed for odd k).
std::optional<Int> exact_root(const Int& n, unsigned long k);
std::optional<Rat> rat_cube_root(const Rat& x);
std::optional<Rat> rat_sqrt(const Rat& x);

// Distinct rational roots of t^3 + p t + q, ascending.
std::vector<Rat> rational_roots_depressed_cubic(const Rat& p, const Rat& q);

Int mod_floor(const Int& a, const Int& m);

}  // namespace cubebr
