#include "cubebr/cubic_form.hpp"

#include <vector>

#include "cubebr/factor.hpp"

namespace cubebr {

namespace {

const QuadFieldElem kThree(3);

long pick_m(std::initializer_list<const QuadFieldElem*> xs) {
  long m = 1;
  for (const QuadFieldElem* x : xs)
    if (x->b != 0) {
      if (m != 1 && m != x->m) throw MathError("form coefficients live in different quadratic fields");
      m = x->m;
    }
  return m;
}

}  // namespace

BinaryCubicForm BinaryCubicForm::from_raw(const QuadFieldElem& a0, const QuadFieldElem& a1, const QuadFieldElem& a2,
                                          const QuadFieldElem& a3) {
  return {a0, a1 / kThree, a2 / kThree, a3};
}

BinaryCubicForm BinaryCubicForm::diagonal(const QuadFieldElem& a, const QuadFieldElem& b) { return {a, 0, 0, b}; }

std::array<QuadFieldElem, 4> BinaryCubicForm::raw() const { return {A, kThree * B, kThree * C, D}; }

QuadFieldElem BinaryCubicForm::operator()(const QuadFieldElem& x, const QuadFieldElem& y) const {
  return A * x * x * x + kThree * B * x * x * y + kThree * C * x * y * y + D * y * y * y;
}

long BinaryCubicForm::field_m() const { return pick_m({&A, &B, &C, &D}); }

std::string BinaryCubicForm::str() const {
  auto r = raw();
  const char* mono[4] = {"X^3", "X^2*Y", "X*Y^2", "Y^3"};
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (r[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += (r[i].b == 0 ? r[i].str() : "(" + r[i].str() + ")") + "*" + mono[i];
  }
  return s.empty() ? "0" : s;
}

bool operator==(const BinaryCubicForm& f, const BinaryCubicForm& g) {
  return f.A == g.A && f.B == g.B && f.C == g.C && f.D == g.D;
}

HessianData hessian(const BinaryCubicForm& f) {
  return {f.A * f.C - f.B * f.B, (f.A * f.D - f.B * f.C) / QuadFieldElem(2), f.B * f.D - f.C * f.C};
}

QuadFieldElem discriminant(const BinaryCubicForm& f) {
  HessianData h = hessian(f);
  return h.S * h.S - h.R * h.T;
}

QuadFieldElem discriminant_expanded(const BinaryCubicForm& f) {
  const auto &A = f.A, &B = f.B, &C = f.C, &D = f.D;
  QuadFieldElem v = A * A * D * D - kThree * B * B * C * C + QuadFieldElem(4) * A * C * C * C +
                    QuadFieldElem(4) * B * B * B * D - QuadFieldElem(6) * A * B * C * D;
  return v / QuadFieldElem(4);
}

BinaryCubicForm transform(const BinaryCubicForm& f, const ChangeOfVariables& Q) {
  if (Q.det().is_zero()) throw MathError("singular change of variables");
  // f(aU + bV, cU + dV) expanded through the polarization of f.
  const auto &p = Q.alpha, &q = Q.gamma, &r = Q.beta, &s = Q.delta;
  auto f30 = f(p, q);
  auto f03 = f(r, s);
  // coefficient of U^2 V is the derivative of f at (p,q) in direction (r,s)
  auto fx = [&](const QuadFieldElem& x, const QuadFieldElem& y) {
    return kThree * (f.A * x * x + QuadFieldElem(2) * f.B * x * y + f.C * y * y);
  };
  auto fy = [&](const QuadFieldElem& x, const QuadFieldElem& y) {
    return kThree * (f.B * x * x + QuadFieldElem(2) * f.C * x * y + f.D * y * y);
  };
  auto u2v = r * fx(p, q) + s * fy(p, q);
  auto uv2 = p * fx(r, s) + q * fy(r, s);
  return BinaryCubicForm::from_raw(f30, u2v, uv2, f03);
}

std::optional<QuadFieldElem> sqrt_in_field(const QuadFieldElem& x, long m) {
  if (x.b != 0) throw MathError("sqrt_in_field expects a rational element");
  if (auto r = rat_sqrt(x.a)) return QuadFieldElem(*r, 0, m);
  if (m != 1)
    if (auto r = rat_sqrt(x.a / Rat(m))) return QuadFieldElem(0, *r, m);
  return std::nullopt;
}

Diagonalization diagonalize(const BinaryCubicForm& f, long field_m) {
  QuadFieldElem delta = discriminant(f);
  if (delta.is_zero()) throw MathError("degenerate form: discriminant is zero");
  Diagonalization out;
  if (f.is_diagonal()) {
    out.diagonalizable = true;
    out.a = f.A;
    out.b = f.D;
    out.branch = "diagonal";
    out.sqrt_delta = f.A * f.D / QuadFieldElem(2);
    return out;
  }
  long m = f.field_m();
  if (m != 1 && field_m != 1 && m != field_m) throw MathError("field tag does not contain the coefficients");
  long work_m = field_m != 1 ? field_m : m;
  std::optional<QuadFieldElem> sd;
  if (delta.b == 0) sd = sqrt_in_field(delta, work_m);
  if (!sd) return out;
  HessianData h = hessian(f);
  bool swap = h.R.is_zero();
  BinaryCubicForm g = swap ? BinaryCubicForm{f.D, f.C, f.B, f.A} : f;
  HessianData hg = swap ? HessianData{h.T, h.S, h.R} : h;
  // U = R X + (S + sD) Y, V = R X + (S - sD) Y, inverted.
  QuadFieldElem two(2);
  ChangeOfVariables Q;
  Q.alpha = (*sd - hg.S) / (two * hg.R * *sd);
  Q.beta = (*sd + hg.S) / (two * hg.R * *sd);
  Q.gamma = QuadFieldElem(1) / (two * *sd);
  Q.delta = QuadFieldElem(-1) / (two * *sd);
  if (swap) {
    std::swap(Q.alpha, Q.gamma);
    std::swap(Q.beta, Q.delta);
  }
  BinaryCubicForm d = transform(f, Q);
  if (!d.is_diagonal()) throw MathError("diagonalization failed to clear the mixed terms");
  out.diagonalizable = true;
  out.a = d.A;
  out.b = d.D;
  out.Q = Q;
  out.sqrt_delta = *sd;
  out.branch = swap ? "T" : "R";
  return out;
}

TwistParameters twist_parameters(const QuadFieldElem& a, const QuadFieldElem& b) {
  if (a.is_zero() || b.is_zero()) throw MathError("twist parameters need a, b nonzero");
  return {-b / a, a, b};
}

std::string TwistCurve::str() const {
  return "X^3 - (" + t.str() + ")*Y^3 = (" + rhs.str() + ")*Z^3";
}

TwistCurve twist_curve(const QuadFieldElem& t, const QuadFieldElem& sqrt_delta) {
  if (t.is_zero() || sqrt_delta.is_zero()) throw MathError("twist curve needs t and sqrt(Delta) nonzero");
  return {t, sqrt_delta, QuadFieldElem(-54) * sqrt_delta * t * t};
}

bool twist_identity_holds(const QuadFieldElem& sd) {
  // With h = 9 sqrt(Delta): (s-h)^3 - (s+h)^3 = -6h s^2 - 2h^3.  Substitute
  // s^2 = R + c (R standing for r^3) and compare with -54 sqrt(Delta) R.
  QuadFieldElem h = QuadFieldElem(9) * sd;
  QuadFieldElem c = QuadFieldElem(-27) * sd * sd;
  QuadFieldElem coeff_R = QuadFieldElem(-6) * h;
  QuadFieldElem coeff_1 = QuadFieldElem(-6) * h * c - QuadFieldElem(2) * h * h * h;
  return coeff_R == QuadFieldElem(-54) * sd && coeff_1.is_zero();
}

QuadFieldElem normalize_twisted(const QuadFieldElem& t) {
  QuadFieldElem tc = t.conj();
  return t * t / (tc * tc);
}

BinaryCubicForm nondiagonal_form_from_t(const QuadFieldElem& t, const Rat& delta) {
  if (t.is_zero()) throw MathError("t must be nonzero");
  if (rat_sqrt(delta)) throw MathError("Delta is a square: use the diagonal construction");
  Int m = squarefree_part(delta.get_num() * delta.get_den());
  if (!m.fits_slong_p()) throw MathError("discriminant class too large");
  long mm = m.get_si();
  QuadFieldElem tt = t.b == 0 ? t.with_m(mm) : t;
  if (tt.m != mm) throw MathError("t does not lie in Q(sqrt Delta)");
  if (tt * tt.conj() != QuadFieldElem(1)) throw MathError("t * conj(t) != 1: normalize t first");
  if (tt.b == 0) throw MathError("t = +-1 is a cube and gives the split boundary form");
  auto sd = sqrt_in_field(QuadFieldElem(delta), mm);
  QuadFieldElem D(delta);
  QuadFieldElem t2 = tt * tt, ti2 = t2.inverse();
  QuadFieldElem k54(54);
  BinaryCubicForm g{(t2 - ti2) / (k54 * *sd), -(t2 + ti2) / (k54 * D), (t2 - ti2) / (k54 * D * *sd),
                    -(t2 + ti2) / (k54 * D * D)};
  for (auto* x : {&g.A, &g.B, &g.C, &g.D}) {
    if (x->b != 0) throw MathError("coefficient left the base field");
    *x = QuadFieldElem(x->a);
  }
  if (discriminant(g).is_zero()) throw MathError("degenerate form (t = +-1)");
  return g;
}

}  // namespace cubebr
