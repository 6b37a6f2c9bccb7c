#include "cubebr/quad.hpp"

#include <cstdlib>

namespace cubebr {

bool is_squarefree_tag(long m) {
  if (m == 0) return false;
  long a = std::labs(m);
  for (long d = 2; d * d <= a; ++d)
    if (a % (d * d) == 0) return false;
  return true;
}

QuadFieldElem::QuadFieldElem(const Rat& a_, const Rat& b_, long m_) : a(a_), b(b_), m(m_) {
  if (!is_squarefree_tag(m)) throw MathError("quadratic field tag must be squarefree and nonzero");
  if (m == 1 && b != 0) throw MathError("sqrt(1) component on the base field");
}

QuadFieldElem QuadFieldElem::sqrt_m(long m) {
  if (m == 1) return QuadFieldElem(1);
  return QuadFieldElem(0, 1, m);
}

QuadFieldElem QuadFieldElem::omega() { return QuadFieldElem(Rat(-1, 2), Rat(1, 2), -3); }
QuadFieldElem QuadFieldElem::eta() { return QuadFieldElem(0, 1, -3); }

QuadFieldElem QuadFieldElem::conj() const { return QuadFieldElem(a, -b, m); }
Rat QuadFieldElem::norm() const { return a * a - Rat(m) * b * b; }
Rat QuadFieldElem::trace() const { return 2 * a; }

QuadFieldElem QuadFieldElem::inverse() const {
  Rat n = norm();
  if (n == 0) throw MathError("inverse of zero");
  return QuadFieldElem(a / n, -b / n, m);
}

QuadFieldElem QuadFieldElem::with_m(long m_) const {
  if (b != 0 && m_ != m) throw MathError("cannot re-tag an irrational element");
  return QuadFieldElem(a, b, m_);
}

std::string QuadFieldElem::str() const {
  if (b == 0) return to_string(a);
  std::string s;
  if (a != 0) s = to_string(a) + (b > 0 ? " + " : " - ");
  else if (b < 0) s = "-";
  Rat ab = abs(b);
  if (ab != 1) s += to_string(ab) + "*";
  s += "sqrt(" + std::to_string(m) + ")";
  return s;
}

namespace {

long join(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.m == y.m) return x.m;
  if (x.b == 0) return y.m;
  if (y.b == 0) return x.m;
  throw MathError("mixing elements of Q(sqrt " + std::to_string(x.m) + ") and Q(sqrt " +
                  std::to_string(y.m) + ")");
}

}  // namespace

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
  return QuadFieldElem(x.a + y.a, x.b + y.b, join(x, y));
}

QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
  return QuadFieldElem(x.a - y.a, x.b - y.b, join(x, y));
}

QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
  long m = join(x, y);
  return QuadFieldElem(x.a * y.a + Rat(m) * x.b * y.b, x.a * y.b + x.b * y.a, m);
}

QuadFieldElem operator/(const QuadFieldElem& x, const QuadFieldElem& y) { return x * y.inverse(); }

QuadFieldElem operator-(const QuadFieldElem& x) { return QuadFieldElem(-x.a, -x.b, x.m); }

bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.a != y.a || x.b != y.b) return false;
  return x.b == 0 || x.m == y.m;
}

bool lex_less(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

QuadFieldElem pow(const QuadFieldElem& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  QuadFieldElem r(Rat(1), 0, x.m), base = x;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace cubebr
