#pragma once

#include <array>
#include <optional>
#include <string>

#include "cubebr/quad.hpp"

namespace cubebr {

// A X^3 + 3B X^2 Y + 3C X Y^2 + D Y^3.
struct BinaryCubicForm {
  QuadFieldElem A, B, C, D;

  // From the plain coefficients of X^3, X^2Y, XY^2, Y^3.
  static BinaryCubicForm from_raw(const QuadFieldElem& a0, const QuadFieldElem& a1, const QuadFieldElem& a2,
                                  const QuadFieldElem& a3);
  static BinaryCubicForm diagonal(const QuadFieldElem& a, const QuadFieldElem& b);

  std::array<QuadFieldElem, 4> raw() const;
  QuadFieldElem operator()(const QuadFieldElem& x, const QuadFieldElem& y) const;
  bool is_diagonal() const { return B.is_zero() && C.is_zero(); }
  long field_m() const;
  std::string str() const;
};

bool operator==(const BinaryCubicForm& f, const BinaryCubicForm& g);

struct HessianData {
  QuadFieldElem R, S, T;
};

// X = alpha U + beta V, Y = gamma U + delta V.
struct ChangeOfVariables {
  QuadFieldElem alpha = 1, beta = 0, gamma = 0, delta = 1;
  QuadFieldElem det() const { return alpha * delta - beta * gamma; }
};

HessianData hessian(const BinaryCubicForm& f);
QuadFieldElem discriminant(const BinaryCubicForm& f);
// The quartic expression (A^2D^2 - 3B^2C^2 + 4AC^3 + 4B^3D - 6ABCD) / 4.
QuadFieldElem discriminant_expanded(const BinaryCubicForm& f);
BinaryCubicForm transform(const BinaryCubicForm& f, const ChangeOfVariables& Q);

// Square root of a rational element inside Q(sqrt m), if there is one.
std::optional<QuadFieldElem> sqrt_in_field(const QuadFieldElem& x, long m);

struct Diagonalization {
  bool diagonalizable = false;
  QuadFieldElem a, b;
  ChangeOfVariables Q;
  QuadFieldElem sqrt_delta;
  std::string branch;  // "R", "T" or "diagonal"
};

// Diagonalize over Q(sqrt field_m) (field_m = 1 for the coefficient field).
Diagonalization diagonalize(const BinaryCubicForm& f, long field_m = 1);

struct TwistParameters {
  QuadFieldElem minus_b_over_a, a, b;
};
TwistParameters twist_parameters(const QuadFieldElem& a, const QuadFieldElem& b);

// X^3 - t Y^3 = rhs Z^3 with rhs = -54 sqrt(Delta) t^2.
struct TwistCurve {
  QuadFieldElem t, sqrt_delta, rhs;
  std::string str() const;
};
TwistCurve twist_curve(const QuadFieldElem& t, const QuadFieldElem& sqrt_delta);

// M^3 - t N^3 = -54 sqrt(Delta) t^2 for M = e^2 (s - 9 sqrt(Delta))/r,
// N = e (s + 9 sqrt(Delta))/r, e^3 = t, checked as a polynomial identity in
// (r^3, s) modulo s^2 = r^3 + c with c = -27 Delta.
bool twist_identity_holds(const QuadFieldElem& sqrt_delta);

// The form of coefficients A = (t^2 - t^-2)/(54 sqrt D), ... for t with
// t * conj(t) = 1 in Q(sqrt m), m the squarefree class of delta.
BinaryCubicForm nondiagonal_form_from_t(const QuadFieldElem& t, const Rat& delta);

// t -> t^2 / conj(t)^2, which satisfies t * conj(t) = 1 and is congruent to t
// modulo cubes when t is in the twisted subgroup.
QuadFieldElem normalize_twisted(const QuadFieldElem& t);

}  // namespace cubebr
