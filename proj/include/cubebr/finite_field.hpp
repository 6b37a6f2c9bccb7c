#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubebr/rational.hpp"

namespace cubebr {

// F_p[x] / (x^n + mod[n-1] x^(n-1) + ... + mod[0]), 1 <= n <= 4, p < 2^31.
class GfField {
 public:
  static std::shared_ptr<const GfField> prime(std::uint64_t p);
  // Extension by a monic polynomial given by its low coefficients; the
  // polynomial must be irreducible (checked by root search for n <= 3).
  static std::shared_ptr<const GfField> extension(std::uint64_t p, std::vector<std::uint64_t> low_coeffs);

  std::uint64_t p() const { return p_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  std::string describe() const;

 private:
  std::uint64_t p_ = 0;
  int n_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> mod_;
};

using GfFieldPtr = std::shared_ptr<const GfField>;

struct Gf {
  GfFieldPtr F;
  std::array<std::uint64_t, 4> c{};

  static Gf from_int(const GfFieldPtr& F, long long n);
  static Gf from_int(const GfFieldPtr& F, const Int& n);
  static Gf gen(const GfFieldPtr& F);  // the class of x
  // element with index i in 0..q-1 (base-p digits as coefficients)
  static Gf from_index(const GfFieldPtr& F, std::uint64_t i);
  std::uint64_t index() const;

  bool is_zero() const;
  Gf inverse() const;
  std::string str() const;
};

Gf operator+(const Gf& x, const Gf& y);
Gf operator-(const Gf& x, const Gf& y);
Gf operator*(const Gf& x, const Gf& y);
Gf operator/(const Gf& x, const Gf& y);
Gf operator-(const Gf& x);
bool operator==(const Gf& x, const Gf& y);
inline bool operator!=(const Gf& x, const Gf& y) { return !(x == y); }

Gf pow(const Gf& x, const Int& e);
Gf pow(const Gf& x, long long e);

inline Gf scalar_like(const Gf& like, long n) { return Gf::from_int(like.F, static_cast<long long>(n)); }
inline bool is_zero(const Gf& x) { return x.is_zero(); }

std::vector<Gf> all_elements(const GfFieldPtr& F);
bool is_square(const Gf& x);
std::optional<Gf> sqrt(const Gf& x);       // smallest-index root
std::optional<Gf> cube_root(const Gf& x);  // smallest-index root (enumeration)
bool is_cube(const Gf& x);
// The two primitive cube roots of unity sorted by index; requires 3 | q-1.
std::vector<Gf> primitive_cube_roots_of_unity(const GfFieldPtr& F);

// Exponent e with x^((q-1)/3) = w^e, w a fixed primitive cube root of unity.
int cube_character(const Gf& x, const Gf& w);

}  // namespace cubebr
