#include "cubebr/clifford.hpp"

#include <algorithm>

namespace cubebr {

namespace {

using Elem = SymbolAlgebraGf::Elem;

Gf gf(const GfFieldPtr& F, long long n) { return Gf::from_int(F, n); }

}  // namespace

SymbolAlgebraGf::SymbolAlgebraGf(const Gf& t, const Gf& u, const Gf& omega) : F_(t.F), t_(t), u_(u) {
  if (t.is_zero() || u.is_zero()) throw MathError("symbol algebra slots must be nonzero");
  if (omega * omega * omega != gf(F_, 1) || omega == gf(F_, 1)) throw MathError("omega is not a primitive cube root of 1");
  w_ = {gf(F_, 1), omega, omega * omega};
}

Elem SymbolAlgebraGf::zero() const {
  Elem e;
  e.fill(gf(F_, 0));
  return e;
}

Elem SymbolAlgebraGf::scalar(const Gf& s) const {
  Elem e = zero();
  e[0] = s;
  return e;
}

Elem SymbolAlgebraGf::basis(int m, int n) const {
  Elem e = zero();
  e[3 * m + n] = gf(F_, 1);
  return e;
}

Elem SymbolAlgebraGf::add(const Elem& x, const Elem& y) const {
  Elem e;
  for (int k = 0; k < 9; ++k) e[k] = x[k] + y[k];
  return e;
}

Elem SymbolAlgebraGf::sub(const Elem& x, const Elem& y) const {
  Elem e;
  for (int k = 0; k < 9; ++k) e[k] = x[k] - y[k];
  return e;
}

Elem SymbolAlgebraGf::scale(const Gf& s, const Elem& x) const {
  Elem e;
  for (int k = 0; k < 9; ++k) e[k] = s * x[k];
  return e;
}

// (i^a j^b)(i^c j^d) = omega^(-bc) i^(a+c) j^(b+d)
Elem SymbolAlgebraGf::mul(const Elem& x, const Elem& y) const {
  Elem e = zero();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Gf& xv = x[3 * a + b];
      if (xv.is_zero()) continue;
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Gf& yv = y[3 * c + d];
          if (yv.is_zero()) continue;
          Gf coef = xv * yv * w_[(9 - (b * c) % 3) % 3];
          int A = a + c, B = b + d;
          if (A >= 3) {
            A -= 3;
            coef = coef * t_;
          }
          if (B >= 3) {
            B -= 3;
            coef = coef * u_;
          }
          e[3 * A + B] = e[3 * A + B] + coef;
        }
    }
  return e;
}

Elem SymbolAlgebraGf::pow(const Elem& x, int e) const {
  if (e < 0) {
    auto inv = inverse(x);
    if (!inv) throw MathError("negative power of a zero divisor");
    return pow(*inv, -e);
  }
  Elem r = one(), base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::optional<Elem> SymbolAlgebraGf::inverse(const Elem& x) const {
  // columns: x * e_k
  std::array<std::array<Gf, 10>, 9> M;
  for (int k = 0; k < 9; ++k) {
    Elem col = mul(x, basis(k / 3, k % 3));
    for (int r = 0; r < 9; ++r) M[r][k] = col[r];
  }
  for (int r = 0; r < 9; ++r) M[r][9] = gf(F_, r == 0 ? 1 : 0);
  for (int col = 0; col < 9; ++col) {
    int piv = -1;
    for (int r = col; r < 9; ++r)
      if (!M[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(M[col], M[piv]);
    Gf inv = M[col][col].inverse();
    for (int k = col; k < 10; ++k) M[col][k] = M[col][k] * inv;
    for (int r = 0; r < 9; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Gf f = M[r][col];
      for (int k = col; k < 10; ++k) M[r][k] = M[r][k] - f * M[col][k];
    }
  }
  Elem out;
  for (int r = 0; r < 9; ++r) out[r] = M[r][9];
  if (!equal(mul(out, x), one())) return std::nullopt;
  return out;
}

bool SymbolAlgebraGf::equal(const Elem& x, const Elem& y) const {
  for (int k = 0; k < 9; ++k)
    if (x[k] != y[k]) return false;
  return true;
}

std::string SymbolAlgebraGf::str(const Elem& x) const {
  std::string s;
  for (int k = 0; k < 9; ++k) {
    if (x[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += x[k].str();
    if (k / 3) s += "*i" + (k / 3 > 1 ? "^" + std::to_string(k / 3) : std::string());
    if (k % 3) s += "*j" + (k % 3 > 1 ? "^" + std::to_string(k % 3) : std::string());
  }
  return s.empty() ? "0" : s;
}

// ---- specialization --------------------------------------------------------

CliffordSpecialization specialize(const Gf& a, const Gf& b, const Gf& r0, const Gf& s0, const Gf& omega) {
  auto F = a.F;
  if (a.is_zero() || b.is_zero()) throw MathError("a and b must be nonzero");
  Gf c = gf(F, -27) * a * a * b * b / gf(F, 4);
  Gf sc = gf(F, 3) * (gf(F, 2) * omega + gf(F, 1)) * a * b / gf(F, 2);
  if (sc * sc != c) throw MathError("omega is not a primitive cube root of unity");
  if (s0 * s0 != r0 * r0 * r0 + c) throw MathError("(r0, s0) is not on Y^2 = X^3 + c");
  if (r0.is_zero()) throw MathError("degenerate point: r0 = 0 forces s0 = +-sqrt(c)");
  SymbolAlgebraGf alg(a, s0 + sc, omega);
  auto x = alg.i(), z = alg.j();
  auto zi = alg.inverse(z);
  if (!zi) throw MathError("z is not invertible");
  auto zeta = alg.scale(r0, *zi);
  auto xi = alg.inverse(x);
  if (!xi) throw MathError("x is not invertible");
  Gf k = (omega * omega - omega).inverse();
  auto y = alg.scale(k, alg.mul(*xi, alg.sub(z, zeta)));
  return {a, b, c, sc, omega, r0, s0, alg, x, y, z, zeta};
}

std::vector<IdentityResult> verify_identities(const CliffordSpecialization& S, const Gf& eps) {
  const auto& A = S.alg;
  auto F = S.a.F;
  std::vector<IdentityResult> out;
  auto check = [&](const std::string& name, const Elem& lhs, const Elem& rhs) {
    bool ok = A.equal(lhs, rhs);
    out.push_back({name, ok ? "pass" : "fail", ok ? "" : A.str(A.sub(lhs, rhs))});
  };
  auto not_evaluable = [&](const std::string& name, const std::string& why) { out.push_back({name, "not-evaluable", why}); };
  const auto &x = S.x, &y = S.y, &z = S.z, &zeta = S.zeta;
  auto m = [&](const Elem& p, const Elem& q) { return A.mul(p, q); };
  auto m3 = [&](const Elem& p, const Elem& q, const Elem& r) { return A.mul(A.mul(p, q), r); };
  auto sc = [&](const Gf& s) { return A.scalar(s); };
  Elem zero = A.zero();
  Gf w = S.omega, w2 = S.omega * S.omega;

  check("x^3 = a", A.pow(x, 3), sc(S.a));
  check("x^2 y + x y x + y x^2 = 0", A.add(A.add(m3(x, x, y), m3(x, y, x)), m3(y, x, x)), zero);
  check("x y^2 + y x y + y^2 x = 0", A.add(A.add(m3(x, y, y), m3(y, x, y)), m3(y, y, x)), zero);
  check("y^3 = b", A.pow(y, 3), sc(S.b));
  check("z = y x - omega x y", z, A.sub(m(y, x), A.scale(w, m(x, y))));
  check("zeta = y x - omega^2 x y", zeta, A.sub(m(y, x), A.scale(w2, m(x, y))));
  check("x z = omega z x", m(x, z), A.scale(w, m(z, x)));
  check("y z = omega^2 z y", m(y, z), A.scale(w2, m(z, y)));
  check("x zeta = omega^2 zeta x", m(x, zeta), A.scale(w2, m(zeta, x)));
  check("y zeta = omega zeta y", m(y, zeta), A.scale(w, m(zeta, y)));
  check("z zeta = zeta z", m(z, zeta), m(zeta, z));
  if (auto xi = A.inverse(x)) check("(y x^-1)^3 = b/a", A.pow(m(y, *xi), 3), sc(S.b / S.a));
  else not_evaluable("(y x^-1)^3 = b/a", "x is a zero divisor");
  check("z^3 = s0 + sqrt(c)", A.pow(z, 3), sc(S.s0 + S.sqrt_c));
  check("zeta^3 = s0 - sqrt(c)", A.pow(zeta, 3), sc(S.s0 - S.sqrt_c));
  check("z zeta = r0", m(z, zeta), sc(S.r0));
  check("r0^3 = s0^2 - c", sc(S.r0 * S.r0 * S.r0), sc(S.s0 * S.s0 - S.c));
  Elem u = A.add(z, zeta);
  check("u^3 - 3 r0 u - 2 s0 = 0 for u = z + zeta",
        A.sub(A.sub(A.pow(u, 3), A.scale(gf(F, 3) * S.r0, u)), sc(gf(F, 2) * S.s0)), zero);
  Elem zz = m(z, zeta);
  bool central = A.equal(m(zz, x), m(x, zz)) && A.equal(m(zz, y), m(y, zz)) && A.equal(m(zz, z), m(z, zz)) &&
                 A.equal(m(zz, zeta), m(zeta, zz));
  out.push_back({"z zeta is central", central ? "pass" : "fail", ""});
  Elem diff = A.sub(z, zeta);
  check("(z - zeta)^3 = 2 sqrt(c) - 3 r0 (z - zeta)", A.pow(diff, 3),
        A.sub(sc(gf(F, 2) * S.sqrt_c), A.scale(gf(F, 3) * S.r0, diff)));

  Gf d = gf(F, -27) * S.c;
  auto di = A.inverse(diff);
  const char* dual_names[] = {"s'^2 = r'^3 + d", "(r'^3 + 4d)/(9 r'^2) = r0", "(s'^3 - 9 d s')/(27 r'^3) = s0",
                              "z + zeta = 2 s'/(3 r')"};
  if (!di) {
    for (auto* n : dual_names) not_evaluable(n, "z - zeta is a zero divisor");
  } else {
    Elem rp = A.scale(gf(F, 6) * S.sqrt_c, *di);
    Elem sp = A.scale(gf(F, 9) * S.sqrt_c, m(u, *di));
    check(dual_names[0], m(sp, sp), A.add(A.pow(rp, 3), sc(d)));
    auto rpi = A.inverse(rp);
    if (!rpi) {
      for (int k = 1; k < 4; ++k) not_evaluable(dual_names[k], "r' is a zero divisor");
    } else {
      Elem rpi2 = m(*rpi, *rpi);
      check(dual_names[1], A.scale(gf(F, 9).inverse(), m(A.add(A.pow(rp, 3), sc(gf(F, 4) * d)), rpi2)), sc(S.r0));
      check(dual_names[2],
            A.scale(gf(F, 27).inverse(), m(A.sub(A.pow(sp, 3), A.scale(gf(F, 9) * d, sp)), A.pow(*rpi, 3))),
            sc(S.s0));
      check(dual_names[3], u, A.scale(gf(F, 2) / gf(F, 3), m(sp, *rpi)));
    }
  }
  Elem uh = A.add(A.scale(w * eps, z), A.scale(w2 * eps, zeta));
  check("uhat^3 - 3 eps^2 r0 uhat - 2 eps^3 s0 = 0",
        A.sub(A.sub(A.pow(uh, 3), A.scale(gf(F, 3) * eps * eps * S.r0, uh)), sc(gf(F, 2) * eps * eps * eps * S.s0)),
        zero);
  return out;
}

// ---- word rewriting --------------------------------------------------------

WordRewriter::Poly WordRewriter::normal_form(const std::string& word) const {
  auto F = a_.F;
  Poly todo{{word, gf(F, 1)}}, done;
  while (!todo.empty()) {
    auto [w, coef] = *todo.begin();
    todo.erase(todo.begin());
    if (coef.is_zero()) continue;
    auto push = [&](const std::string& nw, const Gf& c) {
      auto it = todo.find(nw);
      if (it == todo.end()) todo.emplace(nw, c);
      else it->second = it->second + c;
    };
    std::size_t pos = std::string::npos;
    std::string pat;
    for (const char* p : {"xxx", "yyy", "xxy", "xyy"}) {
      auto q = w.find(p);
      if (q != std::string::npos && q < pos) {
        pos = q;
        pat = p;
      }
    }
    if (pos == std::string::npos) {
      auto it = done.find(w);
      if (it == done.end()) done.emplace(w, coef);
      else it->second = it->second + coef;
      continue;
    }
    std::string pre = w.substr(0, pos), post = w.substr(pos + 3);
    if (pat == "xxx") push(pre + post, coef * a_);
    else if (pat == "yyy") push(pre + post, coef * b_);
    else if (pat == "xxy") {
      push(pre + "xyx" + post, -coef);
      push(pre + "yxx" + post, -coef);
    } else {
      push(pre + "yxy" + post, -coef);
      push(pre + "yyx" + post, -coef);
    }
  }
  for (auto it = done.begin(); it != done.end();) it = it->second.is_zero() ? done.erase(it) : std::next(it);
  return done;
}

Elem evaluate_word(const CliffordSpecialization& S, const std::string& word) {
  Elem r = S.alg.one();
  for (char ch : word) r = S.alg.mul(r, ch == 'x' ? S.x : S.y);
  return r;
}

Elem evaluate_poly(const CliffordSpecialization& S, const WordRewriter::Poly& p) {
  Elem r = S.alg.zero();
  for (const auto& [w, c] : p) r = S.alg.add(r, S.alg.scale(c, evaluate_word(S, w)));
  return r;
}

// ---- trials ----------------------------------------------------------------

bool CliffordSummary::all_pass() const {
  if (trials_run < trials_requested) return false;
  for (const auto& [n, t] : identities)
    if (t.fail) return false;
  return rewriter_agree == rewriter_words && failures.empty();
}

CliffordSummary run_clifford_trials(std::uint64_t seed, int trials, const std::vector<std::uint64_t>& fields,
                                    int words_per_trial) {
  if (trials < 1) throw MathError("trial count must be at least 1");
  if (fields.empty()) throw MathError("no fields given");
  for (auto p : fields)
    if (p % 3 != 1) throw MathError("field F_" + std::to_string(p) + " lacks a primitive cube root of unity");
  CliffordSummary sum;
  sum.seed = seed;
  sum.trials_requested = trials;
  sum.fields = fields;
  std::mt19937_64 rng(seed);
  int guard = 0;
  while (sum.trials_run < trials) {
    if (++guard > 1000 * trials) throw MathError("could not draw enough specializations");
    std::uint64_t p = fields[rng() % fields.size()];
    auto F = GfField::prime(p);
    Gf a = gf(F, static_cast<long long>(1 + rng() % (p - 1)));
    Gf b = gf(F, static_cast<long long>(1 + rng() % (p - 1)));
    auto roots = primitive_cube_roots_of_unity(F);
    Gf w = roots[rng() % 2];
    Gf r0 = gf(F, static_cast<long long>(rng() % p));
    Gf c = gf(F, -27) * a * a * b * b / gf(F, 4);
    auto s = sqrt(r0 * r0 * r0 + c);
    if (!s) continue;
    Gf s0 = rng() % 2 ? *s : -*s;
    if (r0.is_zero()) {
      sum.skipped.push_back("F_" + std::to_string(p) + ", a=" + a.str() + ", b=" + b.str() + ": r0 = 0 gives s0 = " +
                            s0.str() + " = +-sqrt(c), degenerate point");
      continue;
    }
    Gf eps = gf(F, static_cast<long long>(1 + rng() % (p - 1)));
    auto S = specialize(a, b, r0, s0, w);
    ++sum.trials_run;
    for (const auto& r : verify_identities(S, eps)) {
      auto& t = sum.identities[r.name];
      if (r.status == "pass") ++t.pass;
      else if (r.status == "fail") {
        ++t.fail;
        sum.failures.push_back(r.name + " over F_" + std::to_string(p));
      } else ++t.not_evaluable;
    }
    WordRewriter rw(a, b);
    for (int k = 0; k < words_per_trial; ++k) {
      int len = static_cast<int>(rng() % 7);
      std::string word;
      for (int q = 0; q < len; ++q) word += rng() % 2 ? 'y' : 'x';
      ++sum.rewriter_words;
      if (S.alg.equal(evaluate_word(S, word), evaluate_poly(S, rw.normal_form(word)))) ++sum.rewriter_agree;
      else sum.failures.push_back("rewriter disagrees on " + word);
    }
  }
  return sum;
}

}  // namespace cubebr
