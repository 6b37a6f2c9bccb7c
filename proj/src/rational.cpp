#include "cubebr/rational.hpp"

#include <algorithm>

namespace cubebr {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw MathError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw MathError("empty rational literal");
  auto slash = s.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(s, 10);
    } else {
      num = Int(s.substr(0, slash), 10);
      den = Int(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw MathError("malformed rational literal '" + text + "'");
  }
  return make_rat(num, den);
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

int sign(const Rat& x) { return sgn(x); }
int sign(const Int& x) { return sgn(x); }

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw MathError("valuation of zero");
  if (p < 2) throw MathError("valuation at non-prime");
  int v = 0;
  Int m = abs(n);
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const Rat& x, const Int& p) {
  if (x == 0) throw MathError("valuation of zero");
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Int isqrt(const Int& n) {
  if (n < 0) throw MathError("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw MathError("negative power of zero");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Int num = int_pow(base.get_num(), static_cast<unsigned long>(e));
  Int den = int_pow(base.get_den(), static_cast<unsigned long>(e));
  return make_rat(num, den);
}

std::optional<Int> exact_root(const Int& n, unsigned long k) {
  if (k == 0) throw MathError("zeroth root");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int a = abs(n), r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
  if (n < 0) r = -r;
  return r;
}

std::optional<Rat> rat_cube_root(const Rat& x) {
  auto n = exact_root(x.get_num(), 3);
  auto d = exact_root(x.get_den(), 3);
  if (!n || !d) return std::nullopt;
  return make_rat(*n, *d);
}

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  auto n = exact_root(x.get_num(), 2);
  auto d = exact_root(x.get_den(), 2);
  if (!n || !d) return std::nullopt;
  return make_rat(*n, *d);
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

Int eval_cubic(const Int& w, const Int& p, const Int& q) { return w * w * w + p * w + q; }

// Integer root of a monotone cubic on [lo, hi], if any.
std::optional<Int> bisect_root(Int lo, Int hi, const Int& p, const Int& q, bool increasing) {
  if (lo > hi) return std::nullopt;
  while (lo <= hi) {
    Int mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), Int(lo + hi).get_mpz_t(), 1);
    Int v = eval_cubic(mid, p, q);
    if (v == 0) return mid;
    bool go_right = increasing ? (v < 0) : (v > 0);
    if (go_right)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rat> rational_roots_depressed_cubic(const Rat& p, const Rat& q) {
  // t = w / D turns the cubic into a monic integer cubic in w.
  Int D = p.get_den() * q.get_den();
  Rat pp = p * Rat(D * D);
  Rat qq = q * Rat(D * D * D);
  Int P = pp.get_num(), Q = qq.get_num();
  Int bound = 1 + std::max(abs(P), abs(Q));
  std::vector<Int> roots;
  auto push = [&](const std::optional<Int>& r) {
    if (r && std::find(roots.begin(), roots.end(), *r) == roots.end()) roots.push_back(*r);
  };
  if (P >= 0) {
    push(bisect_root(-bound, bound, P, Q, true));
  } else {
    // critical points at +-s with s^2 = -P/3
    Int floor_s2;
    mpz_fdiv_q_ui(floor_s2.get_mpz_t(), Int(-P).get_mpz_t(), 3);
    Int fs = isqrt(floor_s2);
    Int cs = (fs * fs * 3 == -P) ? fs : fs + 1;
    push(bisect_root(-bound, -cs, P, Q, true));
    push(bisect_root(-fs, fs, P, Q, false));
    push(bisect_root(cs, bound, P, Q, true));
  }
  std::vector<Rat> out;
  for (const auto& w : roots) out.push_back(make_rat(w, D));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubebr
