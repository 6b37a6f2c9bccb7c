#pragma once

#include <utility>
#include <vector>

#include "cubebr/rational.hpp"

namespace cubebr {

inline constexpr unsigned long kDefaultTrialBound = 1000000;

struct FactorizationLimit : MathError {
  using MathError::MathError;
};

struct IntegerFactorization {
  int sign = 1;
  std::vector<std::pair<Int, int>> factors;  // ascending primes

  Int value() const;
};

// Trial division up to `bound`; a cofactor that cannot be certified prime
// (i.e. exceeds bound^2) raises FactorizationLimit.
IntegerFactorization factor_integer(const Int& n, unsigned long bound = kDefaultTrialBound);

// Prime support of a nonzero rational (numerator and denominator).
std::vector<Int> prime_support(const Rat& x, unsigned long bound = kDefaultTrialBound);

// Squarefree part of a nonzero integer, sign kept: n = k^2 * m.
Int squarefree_part(const Int& n, unsigned long bound = kDefaultTrialBound);

struct SixthPowerFree {
  Int c;  // sixth-power-free integer
  Rat u;  // c = c_input * u^6
};

SixthPowerFree sixth_power_free(const Rat& c, unsigned long bound = kDefaultTrialBound);

// Third-power-free part with exponents reduced to {1, 2}: returns the primes
// whose exponent in x is not divisible by 3.
std::vector<Int> non_cube_primes(const Rat& x, unsigned long bound = kDefaultTrialBound);

// Square root of a modulo an odd prime p (a a quadratic residue).
Int sqrt_mod_prime(const Int& a, const Int& p);

}  // namespace cubebr
