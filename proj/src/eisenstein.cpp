#include "cubebr/eisenstein.hpp"

#include <algorithm>

namespace cubebr {

EisInt EisInt::from_quad(const QuadFieldElem& z) {
  if (z.b != 0 && z.m != -3) throw MathError("not an element of Q(omega)");
  // a + b*sqrt(-3) = (a + b) + 2b*omega
  Rat u = z.a + z.b, v = 2 * z.b;
  if (u.get_den() != 1 || v.get_den() != 1) throw MathError("element is not integral in Z[omega]");
  return {u.get_num(), v.get_num()};
}

QuadFieldElem EisInt::to_quad() const {
  Rat b = make_rat(v, 2);
  return QuadFieldElem(Rat(u) - b, b, -3);
}

bool is_integral_eisenstein(const QuadFieldElem& z) {
  if (z.b != 0 && z.m != -3) return false;
  Rat u = z.a + z.b, v = 2 * z.b;
  return u.get_den() == 1 && v.get_den() == 1;
}

EisInt operator+(const EisInt& x, const EisInt& y) { return {x.u + y.u, x.v + y.v}; }
EisInt operator-(const EisInt& x, const EisInt& y) { return {x.u - y.u, x.v - y.v}; }
EisInt operator*(const EisInt& x, const EisInt& y) {
  // omega^2 = -1 - omega
  Int vv = x.v * y.v;
  return {x.u * y.u - vv, x.u * y.v + x.v * y.u - vv};
}
bool operator==(const EisInt& x, const EisInt& y) { return x.u == y.u && x.v == y.v; }
Int norm(const EisInt& x) { return x.u * x.u - x.u * x.v + x.v * x.v; }
EisInt conj(const EisInt& x) { return {x.u - x.v, -x.v}; }

std::optional<EisInt> exact_div(const EisInt& x, const EisInt& y) {
  Int n = norm(y);
  if (n == 0) throw MathError("division by zero in Z[omega]");
  EisInt t = x * conj(y);
  if (!mpz_divisible_p(t.u.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.v.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return EisInt{t.u / n, t.v / n};
}

namespace {

Int round_div(const Int& a, const Int& n) {
  // nearest integer to a/n, n > 0
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), Int(2 * a + n).get_mpz_t(), Int(2 * n).get_mpz_t());
  return q;
}

const EisInt kUnits[6] = {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};

// index i in kUnits: sign = (i < 3 ? 1 : -1), omega exponent = i % 3
int unit_index(const EisInt& x) {
  for (int i = 0; i < 6; ++i)
    if (kUnits[i] == x) return i;
  return -1;
}

}  // namespace

EisInt eis_gcd(EisInt x, EisInt y) {
  while (!y.is_zero()) {
    Int n = norm(y);
    EisInt t = x * conj(y);
    EisInt q{round_div(t.u, n), round_div(t.v, n)};
    EisInt r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

QuadFieldElem EisPrime::elem() const { return QuadFieldElem(Rat(x), Rat(y), -3); }
EisInt EisPrime::eis() const { return EisInt::from_quad(elem()); }
Int EisPrime::norm() const { return x * x + 3 * y * y; }

std::string EisPrime::label() const {
  switch (kind) {
    case Kind::Ramified:
      return "sqrt(-3)";
    case Kind::Inert:
      return x.get_str();
    case Kind::Split: {
      std::string s = x.get_str() + (y > 0 ? "+" : "-");
      Int ay = abs(y);
      if (ay != 1) s += ay.get_str() + "*";
      return s + "sqrt(-3)";
    }
  }
  return "";
}

EisPrime EisPrime::ramified() { return {Kind::Ramified, 0, 1, 3}; }
EisPrime EisPrime::inert(const Int& p) { return {Kind::Inert, p, 0, p}; }

bool operator<(const EisPrime& a, const EisPrime& b) {
  Int na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  if (a.y != b.y) return a.y > b.y;  // canonical factor before its conjugate
  return a.x < b.x;
}

bool operator==(const EisPrime& a, const EisPrime& b) { return a.x == b.x && a.y == b.y; }

EisPrime split_prime_above(const Int& p) {
  if (mod_floor(p, 3) != 1) throw MathError(p.get_str() + " does not split in Z[omega]");
  Int r = sqrt_mod_prime(Int(-3), p);
  // gcd(p, r + sqrt(-3)) with sqrt(-3) = 1 + 2*omega
  EisInt g = eis_gcd(EisInt{p, 0}, EisInt{r + 1, 2});
  if (norm(g) != p) throw MathError("Euclidean step failed to split " + p.get_str());
  for (const auto& unit : kUnits) {
    EisInt h = g * unit;
    if (mpz_odd_p(h.v.get_mpz_t())) continue;
    Int y = h.v / 2, x = h.u - y;
    return {EisPrime::Kind::Split, abs(x), abs(y), p};
  }
  throw MathError("no associate of the split factor lies in Z[sqrt(-3)]");
}

std::vector<EisPrime> primes_above(const Int& p) {
  if (p == 3) return {EisPrime::ramified()};
  if (mod_floor(p, 3) == 2) return {EisPrime::inert(p)};
  EisPrime P = split_prime_above(p);
  EisPrime Q = P;
  Q.y = -Q.y;
  return {P, Q};
}

QuadFieldElem EisensteinFactorization::value() const {
  QuadFieldElem v = pow(QuadFieldElem::omega(), unit_omega) * QuadFieldElem(unit_sign);
  for (const auto& [P, e] : factors) v = v * pow(P.elem(), e);
  return v;
}

std::string EisensteinFactorization::str() const {
  std::string s = unit_sign < 0 ? "-" : "";
  if (unit_omega == 1) s += "omega*";
  if (unit_omega == 2) s += "omega^2*";
  bool first = true;
  for (const auto& [P, e] : factors) {
    if (!first) s += "*";
    first = false;
    s += "(" + P.label() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  if (first) s += "1";
  return s;
}

EisensteinFactorization factor_eisenstein(const QuadFieldElem& z, unsigned long bound) {
  if (z.is_zero()) throw MathError("cannot factor zero");
  EisInt w = EisInt::from_quad(z);
  EisensteinFactorization out;
  auto rational = factor_integer(norm(w), bound);
  for (const auto& [p, e] : rational.factors) {
    for (const auto& P : primes_above(p)) {
      EisInt pi = P.eis();
      int k = 0;
      while (auto q = exact_div(w, pi)) {
        w = *q;
        ++k;
      }
      if (k) out.factors.emplace_back(P, k);
    }
  }
  int ui = unit_index(w);
  if (ui < 0) throw MathError("Eisenstein factorization left a non-unit cofactor");
  out.unit_sign = ui < 3 ? 1 : -1;
  out.unit_omega = ui % 3;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

EisFactoredElem factor_q_omega(const QuadFieldElem& z, unsigned long bound) {
  if (z.is_zero()) throw MathError("cannot factor zero");
  if (z.b != 0 && z.m != -3) throw MathError("not an element of Q(omega)");
  Rat u = z.a + z.b, v = 2 * z.b;
  Int D;
  mpz_lcm(D.get_mpz_t(), u.get_den().get_mpz_t(), v.get_den().get_mpz_t());
  QuadFieldElem num = z * QuadFieldElem(Rat(D));
  auto fn = factor_eisenstein(num.with_m(-3), bound);
  auto fd = factor_eisenstein(QuadFieldElem(Rat(D), 0, -3), bound);
  EisFactoredElem out;
  for (const auto& [P, e] : fn.factors) out.exps[P] += e;
  for (const auto& [P, e] : fd.factors) out.exps[P] -= e;
  for (auto it = out.exps.begin(); it != out.exps.end();)
    it = it->second == 0 ? out.exps.erase(it) : std::next(it);
  // unit of num / unit of D
  out.unit_sign = fn.unit_sign * fd.unit_sign;
  out.unit_omega = ((fn.unit_omega - fd.unit_omega) % 3 + 3) % 3;
  return out;
}

int valuation(const QuadFieldElem& z, const EisPrime& P) {
  if (z.is_zero()) throw MathError("valuation of zero");
  Rat u = z.a + z.b, v = 2 * z.b;
  Int D;
  mpz_lcm(D.get_mpz_t(), u.get_den().get_mpz_t(), v.get_den().get_mpz_t());
  auto count = [&](EisInt w) {
    int k = 0;
    EisInt pi = P.eis();
    while (auto q = exact_div(w, pi)) {
      w = *q;
      ++k;
    }
    return k;
  };
  QuadFieldElem num = z * QuadFieldElem(Rat(D));
  return count(EisInt::from_quad(num.with_m(-3))) - count(EisInt{D, 0});
}

GfFieldPtr residue_field(const EisPrime& P) {
  if (P.kind == EisPrime::Kind::Ramified) throw MathError("residue map at the ramified prime is not supported");
  if (P.p >= Int(1u << 31)) throw MathError("residue characteristic too large");
  auto p = static_cast<std::uint64_t>(P.p.get_ui());
  if (P.kind == EisPrime::Kind::Split) return GfField::prime(p);
  // F_p[w] / (w^2 + w + 1)
  return GfField::extension(p, {1, 1});
}

Gf omega_mod(const EisPrime& P, const GfFieldPtr& F) {
  if (P.kind == EisPrime::Kind::Inert) return Gf::gen(F);
  // x + y*sqrt(-3) = 0 gives sqrt(-3) = -x/y, omega = (-1 + sqrt(-3))/2
  Gf s = -Gf::from_int(F, P.x) / Gf::from_int(F, P.y);
  return (s - Gf::from_int(F, 1LL)) / Gf::from_int(F, 2LL);
}

namespace {

Gf reduce_integral(const EisInt& w, const Gf& om) {
  return Gf::from_int(om.F, w.u) + Gf::from_int(om.F, w.v) * om;
}

}  // namespace

Gf reduce_mod(const QuadFieldElem& z, const EisPrime& P, const GfFieldPtr& F) {
  if (z.is_zero()) throw MathError("reduction of zero");
  Rat u = z.a + z.b, v = 2 * z.b;
  Int D;
  mpz_lcm(D.get_mpz_t(), u.get_den().get_mpz_t(), v.get_den().get_mpz_t());
  EisInt num = EisInt::from_quad((z * QuadFieldElem(Rat(D))).with_m(-3));
  EisInt den{D, 0};
  EisInt pi = P.eis();
  int kn = 0, kd = 0;
  while (auto q = exact_div(num, pi)) {
    num = *q;
    ++kn;
  }
  while (auto q = exact_div(den, pi)) {
    den = *q;
    ++kd;
  }
  if (kn != kd) throw MathError("element is not a unit at " + P.label());
  Gf om = omega_mod(P, F);
  return reduce_integral(num, om) / reduce_integral(den, om);
}

int cube_residue_character(const QuadFieldElem& xi, const EisPrime& P) {
  auto F = residue_field(P);
  Gf r = reduce_mod(xi, P, F);
  return cube_character(r, omega_mod(P, F));
}

}  // namespace cubebr
