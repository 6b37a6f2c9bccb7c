#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubebr/finite_field.hpp"

namespace cubebr {

// (t, u)_omega over a finite field: basis i^m j^n at index 3m + n, with
// i^3 = t, j^3 = u, ij = omega ji.
class SymbolAlgebraGf {
 public:
  using Elem = std::array<Gf, 9>;

  SymbolAlgebraGf(const Gf& t, const Gf& u, const Gf& omega);

  const Gf& t() const { return t_; }
  const Gf& u() const { return u_; }
  const Gf& omega() const { return w_[1]; }

  Elem zero() const;
  Elem scalar(const Gf& s) const;
  Elem scalar(long n) const { return scalar(Gf::from_int(F_, static_cast<long long>(n))); }
  Elem one() const { return scalar(1); }
  Elem basis(int m, int n) const;
  Elem i() const { return basis(1, 0); }
  Elem j() const { return basis(0, 1); }

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem scale(const Gf& s, const Elem& x) const;
  Elem pow(const Elem& x, int e) const;
  // Two-sided inverse via a 9x9 linear solve; none for zero divisors.
  std::optional<Elem> inverse(const Elem& x) const;
  bool equal(const Elem& x, const Elem& y) const;
  std::string str(const Elem& x) const;

 private:
  GfFieldPtr F_;
  Gf t_, u_;
  std::array<Gf, 3> w_;
};

struct CliffordSpecialization {
  Gf a, b, c, sqrt_c, omega, r0, s0;
  SymbolAlgebraGf alg;
  SymbolAlgebraGf::Elem x, y, z, zeta;
};

// sqrt(c) = (3/2)(2 omega + 1) a b; the algebra is (a, s0 + sqrt c)_omega
// with x = i, z = j, zeta = r0 z^-1, y = x^-1 (z - zeta)(omega^2 - omega)^-1.
CliffordSpecialization specialize(const Gf& a, const Gf& b, const Gf& r0, const Gf& s0, const Gf& omega);

struct IdentityResult {
  std::string name;
  std::string status;  // "pass", "fail", "not-evaluable"
  std::string detail;
};

std::vector<IdentityResult> verify_identities(const CliffordSpecialization& S, const Gf& epsilon);

// Normal forms of noncommutative polynomials in x, y modulo x^3 -> a,
// y^3 -> b, xxy -> -xyx - yxx, xyy -> -yxy - yyx.
class WordRewriter {
 public:
  using Poly = std::map<std::string, Gf>;
  WordRewriter(const Gf& a, const Gf& b) : a_(a), b_(b) {}
  Poly normal_form(const std::string& word) const;

 private:
  Gf a_, b_;
};

SymbolAlgebraGf::Elem evaluate_word(const CliffordSpecialization& S, const std::string& word);
SymbolAlgebraGf::Elem evaluate_poly(const CliffordSpecialization& S, const WordRewriter::Poly& p);

struct IdentityTally {
  int pass = 0, fail = 0, not_evaluable = 0;
};

struct CliffordSummary {
  std::uint64_t seed = 0;
  int trials_requested = 0;
  int trials_run = 0;
  std::vector<std::uint64_t> fields;
  std::map<std::string, IdentityTally> identities;
  std::vector<std::string> skipped;  // reasons, in draw order
  int rewriter_words = 0;
  int rewriter_agree = 0;
  std::vector<std::string> failures;
  bool all_pass() const;
};

// Randomized specializations over the given primes (each = 1 mod 3),
// mt19937_64 seeded with `seed`.
CliffordSummary run_clifford_trials(std::uint64_t seed, int trials, const std::vector<std::uint64_t>& fields,
                                    int words_per_trial = 100);

}  // namespace cubebr
