#include "cubebr/factor.hpp"

#include <algorithm>
#include <map>

namespace cubebr {

Int IntegerFactorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) v *= int_pow(p, static_cast<unsigned long>(e));
  return v;
}

IntegerFactorization factor_integer(const Int& n, unsigned long bound) {
  if (n == 0) throw MathError("cannot factor zero");
  IntegerFactorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  auto strip = [&](unsigned long d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        ++e;
      }
      out.factors.emplace_back(Int(d), e);
    }
  };
  strip(2);
  strip(3);
  for (unsigned long d = 5; d <= bound; d += 6) {
    if (Int(d) * d > m) break;
    strip(d);
    strip(d + 2);
  }
  if (m > 1) {
    if (m > Int(bound) * Int(bound))
      throw FactorizationLimit("cofactor " + m.get_str() + " exceeds the trial-division bound " +
                               std::to_string(bound));
    out.factors.emplace_back(m, 1);
  }
  return out;
}

std::vector<Int> prime_support(const Rat& x, unsigned long bound) {
  if (x == 0) throw MathError("prime support of zero");
  std::vector<Int> ps;
  for (const auto& [p, e] : factor_integer(x.get_num(), bound).factors) ps.push_back(p);
  for (const auto& [p, e] : factor_integer(x.get_den(), bound).factors) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

Int squarefree_part(const Int& n, unsigned long bound) {
  auto f = factor_integer(n, bound);
  Int m = f.sign;
  for (const auto& [p, e] : f.factors)
    if (e % 2) m *= p;
  return m;
}

SixthPowerFree sixth_power_free(const Rat& c, unsigned long bound) {
  if (c == 0) throw MathError("c must be nonzero");
  // clear the denominator with a sixth power first
  std::map<Int, int> exps;
  auto fn = factor_integer(c.get_num(), bound);
  auto fd = factor_integer(c.get_den(), bound);
  for (const auto& [p, e] : fn.factors) exps[p] += e;
  for (const auto& [p, e] : fd.factors) exps[p] -= e;
  Int cn = fn.sign;
  Rat u = 1;
  for (const auto& [p, e] : exps) {
    int r = ((e % 6) + 6) % 6;
    int shift = (r - e) / 6;  // c * p^(6*shift) has exponent r
    cn *= int_pow(p, static_cast<unsigned long>(r));
    u *= rat_pow(Rat(p), shift);
  }
  return {cn, u};
}

std::vector<Int> non_cube_primes(const Rat& x, unsigned long bound) {
  std::map<Int, int> exps;
  for (const auto& [p, e] : factor_integer(x.get_num(), bound).factors) exps[p] += e;
  for (const auto& [p, e] : factor_integer(x.get_den(), bound).factors) exps[p] -= e;
  std::vector<Int> out;
  for (const auto& [p, e] : exps)
    if (e % 3 != 0) out.push_back(p);
  return out;
}

Int sqrt_mod_prime(const Int& a_in, const Int& p) {
  Int a = mod_floor(a_in, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  Int e = (p - 1) / 2, t;
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (t != 1) throw MathError("not a quadratic residue");
  // Tonelli-Shanks
  Int q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  for (;; ++z) {
    mpz_powm(t.get_mpz_t(), z.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) break;
  }
  Int c, x, b, qq = (q + 1) / 2;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), qq.get_mpz_t(), p.get_mpz_t());
  mpz_powm(b.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (b != 1) {
    unsigned long i = 0;
    Int bb = b;
    while (bb != 1) {
      bb = mod_floor(bb * bb, p);
      ++i;
    }
    Int g = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) g = mod_floor(g * g, p);
    x = mod_floor(x * g, p);
    c = mod_floor(g * g, p);
    b = mod_floor(b * c, p);
    m = i;
  }
  return x;
}

}  // namespace cubebr
