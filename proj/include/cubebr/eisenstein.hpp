#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubebr/factor.hpp"
#include "cubebr/finite_field.hpp"
#include "cubebr/quad.hpp"

namespace cubebr {

// u + v*omega in Z[omega].
struct EisInt {
  Int u = 0;
  Int v = 0;

  static EisInt from_quad(const QuadFieldElem& z);  // must be integral
  QuadFieldElem to_quad() const;
  bool is_zero() const { return u == 0 && v == 0; }
};

EisInt operator+(const EisInt& x, const EisInt& y);
EisInt operator-(const EisInt& x, const EisInt& y);
EisInt operator*(const EisInt& x, const EisInt& y);
bool operator==(const EisInt& x, const EisInt& y);
Int norm(const EisInt& x);
EisInt conj(const EisInt& x);
std::optional<EisInt> exact_div(const EisInt& x, const EisInt& y);
EisInt eis_gcd(EisInt x, EisInt y);
bool is_integral_eisenstein(const QuadFieldElem& z);

// A prime of Z[omega] in canonical form x + y*sqrt(-3):
//   ramified: sqrt(-3) (x=0, y=1); inert: rational p = 2 mod 3 (x=p, y=0);
//   split: x > 0, y != 0, with y > 0 for the canonical factor and y < 0 for
//   its conjugate.
struct EisPrime {
  enum class Kind { Ramified, Inert, Split };
  Kind kind = Kind::Inert;
  Int x = 0;
  Int y = 0;
  Int p = 0;  // rational prime below

  QuadFieldElem elem() const;
  EisInt eis() const;
  Int norm() const;
  std::string label() const;

  static EisPrime ramified();
  static EisPrime inert(const Int& p);
};

bool operator<(const EisPrime& a, const EisPrime& b);
bool operator==(const EisPrime& a, const EisPrime& b);

// The canonical split factor x + y*sqrt(-3) (x, y > 0) of a prime p = 1 mod 3,
// found with the Euclidean algorithm.
EisPrime split_prime_above(const Int& p);
std::vector<EisPrime> primes_above(const Int& p);

struct EisensteinFactorization {
  int unit_sign = 1;   // +-1
  int unit_omega = 0;  // unit = unit_sign * omega^unit_omega
  std::vector<std::pair<EisPrime, int>> factors;

  QuadFieldElem value() const;
  std::string str() const;
};

EisensteinFactorization factor_eisenstein(const QuadFieldElem& z, unsigned long bound = kDefaultTrialBound);

// Factorization of a nonzero element of Q(omega); exponents may be negative.
struct EisFactoredElem {
  int unit_sign = 1;
  int unit_omega = 0;
  std::map<EisPrime, int> exps;
};

EisFactoredElem factor_q_omega(const QuadFieldElem& z, unsigned long bound = kDefaultTrialBound);

int valuation(const QuadFieldElem& z, const EisPrime& P);

// Residue field of a non-ramified prime and the reduction map on P-units.
GfFieldPtr residue_field(const EisPrime& P);
Gf reduce_mod(const QuadFieldElem& z, const EisPrime& P, const GfFieldPtr& F);
Gf omega_mod(const EisPrime& P, const GfFieldPtr& F);

// e in {0,1,2} with xi^((q-1)/3) = omega^e mod P.  Inert primes (residue
// field of order p^2) are supported as well as split primes.
int cube_residue_character(const QuadFieldElem& xi, const EisPrime& P);

}  // namespace cubebr
