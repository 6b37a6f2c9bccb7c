#pragma once

#include <string>

#include "cubebr/rational.hpp"

namespace cubebr {

// a + b*sqrt(m).  m is squarefree and nonzero; m == 1 stands for the base
// field itself, in which case b is always 0.
struct QuadFieldElem {
  Rat a = 0;
  Rat b = 0;
  long m = 1;

  QuadFieldElem() = default;
  QuadFieldElem(const Rat& a_, const Rat& b_, long m_);
  QuadFieldElem(const Rat& a_) : a(a_) {}  // NOLINT(google-explicit-constructor)
  QuadFieldElem(long n) : a(n) {}          // NOLINT(google-explicit-constructor)

  static QuadFieldElem sqrt_m(long m);   // sqrt(m)
  static QuadFieldElem omega();          // (-1 + sqrt(-3)) / 2
  static QuadFieldElem eta();            // 2*omega + 1 = sqrt(-3)

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  QuadFieldElem conj() const;
  Rat norm() const;
  Rat trace() const;
  QuadFieldElem inverse() const;
  QuadFieldElem with_m(long m_) const;  // re-tag a rational element

  std::string str() const;
};

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator/(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem operator-(const QuadFieldElem& x);
bool operator==(const QuadFieldElem& x, const QuadFieldElem& y);
inline bool operator!=(const QuadFieldElem& x, const QuadFieldElem& y) { return !(x == y); }
// lexicographic on (a, b)
bool lex_less(const QuadFieldElem& x, const QuadFieldElem& y);

QuadFieldElem pow(const QuadFieldElem& x, long e);

inline QuadFieldElem scalar_like(const QuadFieldElem& like, long n) { return QuadFieldElem(Rat(n), 0, like.m); }
inline Rat scalar_like(const Rat&, long n) { return Rat(n); }
inline bool is_zero(const QuadFieldElem& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x == 0; }

bool is_squarefree_tag(long m);

}  // namespace cubebr
