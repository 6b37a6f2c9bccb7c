#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubebr/cube.hpp"
#include "cubebr/finite_field.hpp"
#include "cubebr/quad.hpp"

namespace cubebr {

// Affine point (x, y) or the point at infinity on Y^2 = X^3 + c.
template <class F>
struct Point {
  bool inf = true;
  F x{}, y{};

  static Point infinity() { return Point{}; }
  static Point affine(const F& x_, const F& y_) { return Point{false, x_, y_}; }
};

template <class F>
bool operator==(const Point<F>& P, const Point<F>& Q) {
  if (P.inf || Q.inf) return P.inf == Q.inf;
  return P.x == Q.x && P.y == Q.y;
}

template <class F>
struct Curve {
  F c;

  bool contains(const Point<F>& P) const { return P.inf || P.y * P.y == P.x * P.x * P.x + c; }
  Point<F> point(const F& x, const F& y) const {
    Point<F> P = Point<F>::affine(x, y);
    if (!contains(P)) throw MathError("point is not on the curve");
    return P;
  }
  Curve dual() const { return Curve{scalar_like(c, -27) * c}; }

  Point<F> neg(const Point<F>& P) const { return P.inf ? P : Point<F>::affine(P.x, -P.y); }

  Point<F> add(const Point<F>& P, const Point<F>& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    F lam;
    if (P.x == Q.x) {
      if (is_zero(P.y + Q.y)) return Point<F>::infinity();
      lam = scalar_like(c, 3) * P.x * P.x / (scalar_like(c, 2) * P.y);
    } else {
      lam = (Q.y - P.y) / (Q.x - P.x);
    }
    F x3 = lam * lam - P.x - Q.x;
    F y3 = lam * (P.x - x3) - P.y;
    return Point<F>::affine(x3, y3);
  }

  Point<F> smul(long n, Point<F> P) const {
    if (n < 0) {
      n = -n;
      P = neg(P);
    }
    Point<F> R = Point<F>::infinity();
    while (n) {
      if (n & 1) R = add(R, P);
      P = add(P, P);
      n >>= 1;
    }
    return R;
  }

  // (r,s) -> ((r^3 + 4c)/r^2, (s^3 - 9cs)/r^3) onto Y^2 = X^3 - 27c.
  Point<F> lambda(const Point<F>& P) const {
    if (P.inf || is_zero(P.x)) return Point<F>::infinity();
    F r2 = P.x * P.x, r3 = r2 * P.x;
    return Point<F>::affine((r3 + scalar_like(c, 4) * c) / r2,
                            (P.y * P.y * P.y - scalar_like(c, 9) * c * P.y) / r3);
  }

  // For this curve viewed as E' with d = c: ((r^3 + 4d)/9r^2, (s^3 - 9ds)/27r^3)
  // onto Y^2 = X^3 - d/27.
  Point<F> lambda_prime(const Point<F>& P) const {
    if (P.inf || is_zero(P.x)) return Point<F>::infinity();
    F r2 = P.x * P.x, r3 = r2 * P.x;
    return Point<F>::affine((r3 + scalar_like(c, 4) * c) / (scalar_like(c, 9) * r2),
                            (P.y * P.y * P.y - scalar_like(c, 9) * c * P.y) / (scalar_like(c, 27) * r3));
  }
};

using RatCurve = Curve<Rat>;
using RatPoint = Point<Rat>;
using GfCurve = Curve<Gf>;
using GfPoint = Point<Gf>;

std::string to_string(const RatPoint& P);

// Every point of E(F_q), infinity first, then by (index x, index y).
std::vector<GfPoint> enumerate_points(const GfCurve& E);

// Exhaustive checks on E(F_q): lambda and lambda' are homomorphisms, lambda'
// o lambda = [3], and |ker lambda| = 3 exactly when c is a square.
struct IsogenyOracle {
  std::size_t points = 0;
  std::size_t kernel = 0;
  bool lambda_on_curve = true;
  bool lambda_hom = true;
  bool lambda_prime_hom = true;
  bool triple = true;
  bool kernel_matches = true;
  bool ok() const { return lambda_on_curve && lambda_hom && lambda_prime_hom && triple && kernel_matches; }
};
IsogenyOracle isogeny_oracle(const GfCurve& E);

// Preimage under lambda' of P in E(F_p) by the cube-root construction.  When
// s + sqrt(c) is not a cube in F_p the computation moves to F_p[x]/(x^3 - xi).
struct Preimage {
  bool extended = false;
  GfFieldPtr field;
  GfPoint point;  // on Y^2 = X^3 - 27c over `field`
};
Preimage lambda_prime_preimage(const GfCurve& E, const GfPoint& P, const Gf& sqrt_c);

// Map an element of the prime field into an extension of the same characteristic.
Gf embed(const Gf& x, const GfFieldPtr& K);

struct TorsionGroup {
  int order = 1;
  std::vector<RatPoint> points;  // all torsion points, O first
  RatPoint generator;
  std::string label() const;
};

// Torsion of Y^2 = X^3 + c for a sixth-power-free integer c, by the table
// Z/6 (c = 1), Z/3 (c a square or -432), Z/2 (c a cube), trivial otherwise.
TorsionGroup torsion_subgroup(const Int& c);

struct ModelChange {
  Int c_norm;  // sixth-power-free
  Rat u;       // (r, s) -> (r u^2, s u^3)
  RatPoint map(const RatPoint& P) const;
};
ModelChange normalize_model(const Rat& c);

// Points (m/e^2, n/e^3), |m| <= bound, 1 <= e <= denom_bound, gcd(m, e) = 1,
// on Y^2 = X^3 + c with c an integer.  Sorted by (e, |m|, m, |n|, n > 0 first).
std::vector<RatPoint> search_points(const Int& c, long bound, long denom_bound);
bool point_order_less(const RatPoint& P, const RatPoint& Q);

// sqrt(c) with positive coefficient, in Q(sqrt m) with m the squarefree class.
QuadFieldElem positive_sqrt(const Rat& c);

// alpha(P) = class of s + sqrt(c) in field_m (the field of sqrt(c), or Q(omega)
// when working over Q(omega)); alpha(O) = 1, alpha(0, -sqrt c) = 4c.
CubeClass alpha(const RatPoint& P, const Rat& c, const QuadFieldElem& sqrt_c, long field_m);

struct FieldConfig {
  bool sqrt_c_in_k = false;
  bool sqrt_d_in_k = false;
  bool omega_in_k = false;
};

struct RankVerdict {
  bool consistent = false;
  std::string identity;  // which cardinality law applied
  std::string detail;
};

// Consistency of rank with |im alpha|, |im alpha'| (powers of 3).
RankVerdict validate_rank_data(long rank, const Int& im_alpha, const Int& im_alpha_prime, const FieldConfig& cfg);

}  // namespace cubebr
