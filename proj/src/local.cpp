#include "cubebr/local.hpp"

#include <algorithm>
#include <set>

#include "cubebr/factor.hpp"

namespace cubebr {

Rat thirds_to_rat(int e) { return make_rat(((e % 3) + 3) % 3, 3); }

InvariantTable nonzero(const InvariantTable& t) {
  InvariantTable out;
  for (const auto& e : t)
    if (e.thirds % 3) out.push_back(e);
  return out;
}

int invariant_sum(const InvariantTable& t) {
  int s = 0;
  for (const auto& e : t) s += e.thirds;
  return ((s % 3) + 3) % 3;
}

namespace {

int mod3(long e) { return static_cast<int>(((e % 3) + 3) % 3); }

}  // namespace

int tame_invariant(const QuadFieldElem& t, const QuadFieldElem& u, const EisPrime& P) {
  if (P.kind == EisPrime::Kind::Ramified) throw MathError("the prime above 3 is wild; use reciprocity");
  QuadFieldElem tt = t.b == 0 ? t.with_m(-3) : t, uu = u.b == 0 ? u.with_m(-3) : u;
  int vt = valuation(tt, P), vu = valuation(uu, P);
  QuadFieldElem x = pow(tt, vu) * pow(uu, -vt);
  if ((vt * vu) % 2) x = -x;
  return mod3(-cube_residue_character(x, P));
}

std::map<EisPrime, int> symbol_invariants(const QuadFieldElem& t, const QuadFieldElem& u) {
  if (t.is_zero() || u.is_zero()) throw MathError("symbol slots must be nonzero");
  QuadFieldElem tt = t.b == 0 ? t.with_m(-3) : t, uu = u.b == 0 ? u.with_m(-3) : u;
  if (tt.m != -3 || uu.m != -3) throw MathError("symbol slots must lie in Q(omega)");
  std::set<EisPrime> support;
  for (const auto& [P, e] : factor_q_omega(tt).exps) support.insert(P);
  for (const auto& [P, e] : factor_q_omega(uu).exps) support.insert(P);
  std::map<EisPrime, int> out;
  int total = 0;
  for (const auto& P : support) {
    if (P.kind == EisPrime::Kind::Ramified) continue;
    int e = tame_invariant(tt, uu, P);
    out[P] = e;
    total += e;
  }
  out[EisPrime::ramified()] = mod3(-total);
  return out;
}

InvariantTable to_table(const std::map<EisPrime, int>& inv) {
  InvariantTable t;
  for (const auto& [P, e] : inv) t.push_back({P.label(), e});
  return t;
}

std::map<Int, int> descend_to_q(const std::map<EisPrime, int>& inv) {
  std::map<Int, int> out;
  auto at = [&](const EisPrime& P) {
    auto it = inv.find(P);
    return it == inv.end() ? 0 : it->second;
  };
  for (const auto& [P, e] : inv) {
    if (out.count(P.p)) continue;
    if (P.kind == EisPrime::Kind::Split) {
      EisPrime Pc{EisPrime::Kind::Split, P.x, -P.y, P.p};
      if (at(P) != at(Pc))
        throw MathError("invariants at the two primes over " + P.p.get_str() + " differ; not defined over Q");
      out[P.p] = at(P);
    } else {
      out[P.p] = mod3(2 * e);
    }
  }
  return out;
}

InvariantTable to_table(const std::map<Int, int>& inv) {
  InvariantTable t;
  for (const auto& [p, e] : inv) t.push_back({p.get_str(), e});
  return t;
}

// ---- Galois ring -----------------------------------------------------------

GaloisRing2::GaloisRing2(const Int& p, int precision) : p_(p), N_(precision) {
  if (p == 3) throw MathError("the prime 3 is wildly ramified in Q(omega)");
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw MathError(p.get_str() + " is not prime");
  if (p >= Int(1) << 31) throw MathError("residue characteristic too large");
  if (precision < 8) throw MathError("precision too small");
  pN_ = int_pow(p, static_cast<unsigned long>(N_));
  if (p == 2) {
    g1_ = 1;
    g0_ = 1;
  } else {
    Int n = 2;
    while (mpz_legendre(n.get_mpz_t(), p.get_mpz_t()) != -1) ++n;
    g1_ = 0;
    g0_ = mod_floor(-n, pN_);
  }
  std::uint64_t pp = p.get_ui();
  residue_ = GfField::extension(pp, {mod_floor(g0_, p).get_ui(), mod_floor(g1_, p).get_ui()});
}

GaloisRing2::Elem GaloisRing2::reduce_coeffs(Elem x) const {
  x.c0 = mod_floor(x.c0, pN_);
  x.c1 = mod_floor(x.c1, pN_);
  return x;
}

GaloisRing2::Elem GaloisRing2::from_int(const Int& n) const { return reduce_coeffs({n, 0}); }
GaloisRing2::Elem GaloisRing2::add(const Elem& x, const Elem& y) const { return reduce_coeffs({x.c0 + y.c0, x.c1 + y.c1}); }
GaloisRing2::Elem GaloisRing2::sub(const Elem& x, const Elem& y) const { return reduce_coeffs({x.c0 - y.c0, x.c1 - y.c1}); }

GaloisRing2::Elem GaloisRing2::mul(const Elem& x, const Elem& y) const {
  Int t = x.c1 * y.c1;
  return reduce_coeffs({x.c0 * y.c0 - g0_ * t, x.c0 * y.c1 + x.c1 * y.c0 - g1_ * t});
}

GaloisRing2::Elem GaloisRing2::inverse(const Elem& x) const {
  Int n = mod_floor(x.c0 * x.c0 - g1_ * x.c0 * x.c1 + g0_ * x.c1 * x.c1, pN_);
  Int ni;
  if (mpz_invert(ni.get_mpz_t(), n.get_mpz_t(), pN_.get_mpz_t()) == 0) throw MathError("not a unit in the Galois ring");
  return mul({x.c0 - g1_ * x.c1, -x.c1}, from_int(ni));
}

bool GaloisRing2::is_zero(const Elem& x) const { return x.c0 == 0 && x.c1 == 0; }

int GaloisRing2::valuation(const Elem& x) const {
  int v = N_;
  for (const Int* c : {&x.c0, &x.c1})
    if (*c != 0) v = std::min(v, cubebr::valuation(*c, p_));
  return v;
}

Gf GaloisRing2::reduce(const Elem& x) const {
  Gf g{residue_, {}};
  g.c[0] = mod_floor(x.c0, p_).get_ui();
  g.c[1] = mod_floor(x.c1, p_).get_ui();
  return g;
}

GaloisRing2::Elem GaloisRing2::sqrt_of(long m, int choice) const {
  Int M(m);
  Elem root;
  bool theta = false;
  if (p_ == 2) {
    if (mod_floor(M, 4) != 1) throw MathError("2 ramifies in Q(sqrt " + std::to_string(m) + ")");
    theta = true;
    Int k = (M - 1) / 4;
    root = mod_floor(k, 2) == 0 ? Elem{0, 0} : Elem{0, 1};
  } else {
    if (mod_floor(M, p_) == 0) throw MathError(p_.get_str() + " ramifies in Q(sqrt " + std::to_string(m) + ")");
    if (mpz_legendre(M.get_mpz_t(), p_.get_mpz_t()) == 1) {
      root = from_int(sqrt_mod_prime(mod_floor(M, p_), p_));
    } else {
      Int n = mod_floor(-g0_, p_), ninv;
      mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
      root = {0, sqrt_mod_prime(mod_floor(M * ninv, p_), p_)};
    }
  }
  // Newton on X^2 - X - (m-1)/4 or X^2 - m
  Elem k = theta ? from_int((M - 1) / 4) : from_int(M);
  for (int it = 0; it < 64; ++it) {
    Elem f = sub(mul(root, root), theta ? add(root, k) : k);
    if (is_zero(f)) break;
    Elem fp = theta ? sub(add(root, root), from_int(1)) : add(root, root);
    root = sub(root, mul(f, inverse(fp)));
  }
  Elem s = theta ? sub(add(root, root), from_int(1)) : root;
  if (!is_zero(sub(mul(s, s), from_int(M)))) throw MathError("square root lifting failed");
  return choice == 0 ? s : sub(from_int(0), s);
}

LocalValue local_value(const GaloisRing2& R, const LocalEmbedding& emb, const QuadFieldElem& x) {
  if (x.is_zero()) throw MathError("valuation of zero");
  const Int& p = R.p();
  Int D = x.a.get_den();
  mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.b.get_den().get_mpz_t());
  Int A = Rat(x.a * D).get_num(), B = Rat(x.b * D).get_num();
  int k = cubebr::valuation(D, p);
  Int Dp = D / int_pow(p, static_cast<unsigned long>(k)), Dinv;
  mpz_invert(Dinv.get_mpz_t(), mod_floor(Dp, R.modulus()).get_mpz_t(), R.modulus().get_mpz_t());
  GaloisRing2::Elem z = R.from_int(A);
  if (x.b != 0) {
    auto it = emb.sqrt_image.find(x.m);
    if (it == emb.sqrt_image.end()) throw MathError("no image of sqrt(" + std::to_string(x.m) + ") in this embedding");
    z = R.add(z, R.mul(R.from_int(B), it->second));
  }
  z = R.mul(z, R.from_int(Dinv));
  int vz = R.valuation(z);
  if (vz > R.precision() / 2) throw MathError("valuation exceeds the working precision");
  Int pv = int_pow(p, static_cast<unsigned long>(vz));
  GaloisRing2::Elem unit{z.c0 / pv, z.c1 / pv};
  return {vz - k, R.reduce(unit)};
}

std::vector<LocalEmbedding> local_embeddings(const GaloisRing2& R, long m1, long m2) {
  std::vector<LocalEmbedding> out;
  auto r3 = R.sqrt_of(-3, 0);
  auto neg = [&](const GaloisRing2::Elem& e) { return R.sub(R.from_int(0), e); };
  if (m1 == -3) {
    for (int s3 = 0; s3 < 2; ++s3) {
      LocalEmbedding e;
      e.label = std::string("sqrt(-3) -> ") + (s3 ? "-" : "+") + "r";
      e.sqrt_image[-3] = s3 ? neg(r3) : r3;
      out.push_back(e);
    }
    return out;
  }
  auto r1 = R.sqrt_of(m1, 0);
  Int k2 = Int(-3 * m1) / Int(m2);
  auto k = exact_root(k2, 2);
  if (!k) throw MathError("sqrt(m2) is not sqrt(m1) * sqrt(-3) up to a rational");
  Int kinv;
  mpz_invert(kinv.get_mpz_t(), mod_floor(*k, R.modulus()).get_mpz_t(), R.modulus().get_mpz_t());
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s3 = 0; s3 < 2; ++s3) {
      LocalEmbedding e;
      auto i1 = s1 ? neg(r1) : r1;
      auto i3 = s3 ? neg(r3) : r3;
      e.label = "sqrt(" + std::to_string(m1) + ") -> " + (s1 ? "-" : "+") + "r, sqrt(-3) -> " + (s3 ? "-" : "+") + "r";
      e.sqrt_image[m1] = i1;
      e.sqrt_image[-3] = i3;
      if (m2 != 1) e.sqrt_image[m2] = R.mul(R.mul(i1, i3), R.from_int(kinv));
      out.push_back(e);
    }
  return out;
}

bool is_p_unit(const QuadFieldElem& x, const Int& p) {
  if (x.is_zero()) return false;
  if (x.b == 0) return valuation(x.a, p) == 0;
  if (x.a != 0 && valuation(2 * x.a, p) < 0) return false;
  return valuation(x.norm(), p) == 0;
}

namespace {

long tag_of(const QuadFieldElem& t) { return t.m; }

long companion_tag(long m1) {
  Int m2 = squarefree_part(Int(-3 * m1));
  return m2.get_si();
}

bool ramified_in(long m, const Int& p) {
  if (m == 1) return false;
  if (p == 2) return mod_floor(Int(m), 4) != 1;
  return mod_floor(Int(m), p) == 0;
}

}  // namespace

PrimeCertificate cup_product_local(const QuadFieldElem& t, const QuadFieldElem& u, const Int& p, int precision) {
  PrimeCertificate cert;
  cert.p = p;
  long m1 = tag_of(t);
  if (m1 == 1) throw MathError("t must carry the tag of Q(sqrt Delta)");
  long m2 = companion_tag(m1);
  if (u.b != 0 && u.m != m2) throw MathError("u does not lie in Q(sqrt " + std::to_string(m2) + ")");
  if (p == 3) throw MathError("the invariant at 3 comes from reciprocity");
  bool ram = ramified_in(m1, p) || ramified_in(m2, p);
  if (ram) {
    if (is_p_unit(t, p) && is_p_unit(u, p)) {
      cert.status = "ramified-units";
      cert.thirds = 0;
      cert.detail = "tamely ramified, t and u are units";
    } else {
      cert.status = "not-evaluable";
      cert.detail = "ramified prime with a non-unit slot";
    }
    return cert;
  }
  GaloisRing2 R(p, precision);
  std::optional<int> agreed;
  for (const auto& emb : local_embeddings(R, m1, m2)) {
    EmbeddingCertificate ec;
    ec.embedding = emb.label;
    auto lt = local_value(R, emb, t), lu = local_value(R, emb, u);
    auto lw = local_value(R, emb, QuadFieldElem::omega());
    ec.v_t = lt.v;
    ec.v_u = lu.v;
    if (lt.v == 0) ec.t_residue_is_cube = is_cube(lt.residue);
    Gf x = pow(lt.residue, static_cast<long long>(lu.v)) * pow(lu.residue, static_cast<long long>(-lt.v));
    if ((lt.v * lu.v) % 2) x = -x;
    ec.tame_residue = x.str();
    ec.character = cube_character(x, lw.residue);
    ec.thirds_local = mod3(-ec.character);
    int over_q = mod3(2 * ec.thirds_local);
    if (agreed && *agreed != over_q) throw MathError("embeddings disagree at " + p.get_str() + "; algebra not defined over Q");
    agreed = over_q;
    cert.embeddings.push_back(ec);
  }
  cert.status = "unramified";
  cert.thirds = agreed;
  return cert;
}

std::vector<Int> cup_product_candidate_primes(const QuadFieldElem& t, const QuadFieldElem& u,
                                              const std::vector<Int>& extra) {
  std::set<Int> out;
  auto add_rat = [&](const Rat& x) {
    if (x == 0) return;
    for (const Int& p : prime_support(x)) out.insert(p);
  };
  for (const auto* x : {&t, &u}) {
    add_rat(x->norm());
    add_rat(Rat(x->a.get_den()));
    add_rat(Rat(x->b.get_den()));
  }
  long m1 = t.m, m2 = companion_tag(m1);
  for (long m : {m1, m2})
    if (m != 1)
      for (const Int& p : prime_support(Rat(m))) out.insert(p);
  if (ramified_in(m1, 2) || ramified_in(m2, 2)) out.insert(2);
  for (const Int& p : extra) out.insert(p);
  out.erase(3);
  return {out.begin(), out.end()};
}

}  // namespace cubebr
