#include "cubebr/elliptic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cubebr/factor.hpp"

namespace cubebr {

std::string to_string(const RatPoint& P) {
  if (P.inf) return "O";
  return "(" + to_string(P.x) + ", " + to_string(P.y) + ")";
}

std::vector<GfPoint> enumerate_points(const GfCurve& E) {
  std::vector<GfPoint> pts{GfPoint::infinity()};
  auto elems = all_elements(E.c.F);
  for (const Gf& x : elems) {
    Gf rhs = x * x * x + E.c;
    for (const Gf& y : elems)
      if (y * y == rhs) pts.push_back(GfPoint::affine(x, y));
  }
  return pts;
}

IsogenyOracle isogeny_oracle(const GfCurve& E) {
  IsogenyOracle out;
  GfCurve Ep = E.dual();
  auto pts = enumerate_points(E);
  auto pts_p = enumerate_points(Ep);
  out.points = pts.size();
  for (const auto& P : pts) {
    GfPoint L = E.lambda(P);
    if (!Ep.contains(L)) out.lambda_on_curve = false;
    if (L.inf) ++out.kernel;
    if (!(Ep.lambda_prime(L) == E.smul(3, P))) out.triple = false;
    for (const auto& Q : pts)
      if (!(E.lambda(E.add(P, Q)) == Ep.add(L, E.lambda(Q)))) out.lambda_hom = false;
  }
  for (const auto& P : pts_p)
    for (const auto& Q : pts_p)
      if (!(Ep.lambda_prime(Ep.add(P, Q)) == E.add(Ep.lambda_prime(P), Ep.lambda_prime(Q)))) out.lambda_prime_hom = false;
  out.kernel_matches = (out.kernel == 3) == is_square(E.c);
  return out;
}

Gf embed(const Gf& x, const GfFieldPtr& K) {
  if (x.F->degree() != 1) throw MathError("embed expects a prime-field element");
  if (x.F->p() != K->p()) throw MathError("characteristic mismatch");
  return Gf::from_int(K, static_cast<long long>(x.c[0]));
}

Preimage lambda_prime_preimage(const GfCurve& E, const GfPoint& P, const Gf& sqrt_c) {
  if (P.inf) throw MathError("preimage of O is taken from the kernel, not this construction");
  if (!E.contains(P)) throw MathError("point is not on the curve");
  if (sqrt_c * sqrt_c != E.c) throw MathError("sqrt_c is not a square root of c");
  Gf xi = P.y + sqrt_c;
  if (xi.is_zero()) throw MathError("s = -sqrt(c): the cube-root construction needs s != -sqrt(c)");
  Preimage out;
  Gf t, r, sc;
  if (auto root = cube_root(xi)) {
    out.field = E.c.F;
    t = *root;
    r = P.x;
    sc = sqrt_c;
  } else {
    if (E.c.F->degree() != 1) throw MathError("cubic extension is built over prime fields only");
    std::uint64_t p = E.c.F->p();
    out.extended = true;
    out.field = GfField::extension(p, {(p - xi.c[0]) % p, 0, 0});
    t = Gf::gen(out.field);
    r = embed(P.x, out.field);
    sc = embed(sqrt_c, out.field);
  }
  Gf that = r / t;
  Gf diff = t - that;
  Gf six = Gf::from_int(out.field, 6LL), nine = Gf::from_int(out.field, 9LL);
  out.point = GfPoint::affine(six * sc / diff, nine * sc * (t + that) / diff);
  return out;
}

std::string TorsionGroup::label() const {
  if (order == 1) return "trivial";
  return "Z/" + std::to_string(order);
}

TorsionGroup torsion_subgroup(const Int& c_in) {
  auto norm = sixth_power_free(Rat(c_in));
  if (norm.c != c_in) throw MathError("torsion table expects a sixth-power-free integer");
  const Int& c = c_in;
  RatCurve E{Rat(c)};
  TorsionGroup T;
  if (c == 1) {
    T.generator = E.point(2, 3);
  } else if (auto r = exact_root(c, 2); r && c > 0) {
    T.generator = E.point(0, Rat(*r));
  } else if (c == -432) {
    T.generator = E.point(12, 36);
  } else if (auto q = exact_root(c, 3)) {
    T.generator = E.point(Rat(-*q), 0);
  } else {
    T.points = {RatPoint::infinity()};
    T.generator = RatPoint::infinity();
    return T;
  }
  RatPoint P = T.generator;
  T.points = {RatPoint::infinity()};
  while (!P.inf) {
    T.points.push_back(P);
    P = E.add(P, T.generator);
    if (T.points.size() > 12) throw MathError("torsion generator has unexpected order");
  }
  T.order = static_cast<int>(T.points.size());
  return T;
}

RatPoint ModelChange::map(const RatPoint& P) const {
  if (P.inf) return P;
  return RatPoint::affine(P.x * u * u, P.y * u * u * u);
}

ModelChange normalize_model(const Rat& c) {
  auto s = sixth_power_free(c);
  return {s.c, s.u};
}

bool point_order_less(const RatPoint& P, const RatPoint& Q) {
  if (P.inf != Q.inf) return P.inf;
  if (P.inf) return false;
  Int eP = isqrt(P.x.get_den()), eQ = isqrt(Q.x.get_den());
  if (eP != eQ) return eP < eQ;
  Int mP = P.x.get_num(), mQ = Q.x.get_num();
  if (abs(mP) != abs(mQ)) return abs(mP) < abs(mQ);
  if (mP != mQ) return mP < mQ;
  Int nP = P.y.get_num(), nQ = Q.y.get_num();
  if (abs(nP) != abs(nQ)) return abs(nP) < abs(nQ);
  return nP > nQ;
}

std::vector<RatPoint> search_points(const Int& c, long bound, long denom_bound) {
  if (bound < 1 || denom_bound < 1) throw MathError("search bounds must be at least 1");
  std::vector<RatPoint> out;
  for (long e = 1; e <= denom_bound; ++e) {
    Int e2 = Int(e) * e, e6 = e2 * e2 * e2;
    Int ce6 = c * e6;
    for (long m = -bound; m <= bound; ++m) {
      if (e > 1 && std::gcd(std::labs(m), e) != 1) continue;
      Int mm(m);
      Int rhs = mm * mm * mm + ce6;
      if (rhs < 0) continue;
      Int n;
      mpz_sqrt(n.get_mpz_t(), rhs.get_mpz_t());
      if (n * n != rhs) continue;
      Rat x = make_rat(mm, e2), y = make_rat(n, e2 * e);
      out.push_back(RatPoint::affine(x, y));
      if (n != 0) out.push_back(RatPoint::affine(x, -y));
    }
  }
  std::sort(out.begin(), out.end(), point_order_less);
  return out;
}

QuadFieldElem positive_sqrt(const Rat& c) {
  if (c == 0) throw MathError("sqrt(0) is not a field generator");
  Int sq = squarefree_part(c.get_num() * c.get_den());
  if (!sq.fits_slong_p()) throw MathError("squarefree class too large");
  long m = sq.get_si();
  auto r = rat_sqrt(c / Rat(sq));
  if (!r) throw MathError("internal: c / m is not a square");
  if (m == 1) return QuadFieldElem(*r);
  return QuadFieldElem(0, *r, m);
}

CubeClass alpha(const RatPoint& P, const Rat& c, const QuadFieldElem& sqrt_c, long field_m) {
  if (P.inf) return CubeClass::one(field_m);
  QuadFieldElem xi = QuadFieldElem(P.y) + sqrt_c;
  if (xi.is_zero()) xi = QuadFieldElem(4 * c);
  if (xi.b == 0) xi = xi.with_m(field_m);
  return CubeClass::make(xi, field_m);
}

namespace {

int log3(const Int& n) {
  int k = 0;
  Int x = n;
  while (x > 1) {
    if (x % 3 != 0) return -1;
    x /= 3;
    ++k;
  }
  return x == 1 ? k : -1;
}

}  // namespace

RankVerdict validate_rank_data(long rank, const Int& ia, const Int& iap, const FieldConfig& cfg) {
  RankVerdict v;
  int ea = log3(ia), eap = log3(iap);
  if (rank < 0) {
    v.detail = "negative rank";
    return v;
  }
  if (ea < 0 || eap < 0) {
    v.detail = "image sizes must be powers of 3";
    return v;
  }
  if (cfg.omega_in_k) {
    if (rank % 2 != 0) {
      v.identity = "rank is even when omega is in k";
      v.detail = "odd rank " + std::to_string(rank) + " over a field containing omega";
      return v;
    }
    if (ia != iap) {
      v.identity = "im a = im a' when omega is in k";
      v.detail = "image sizes differ";
      return v;
    }
    long want = cfg.sqrt_c_in_k ? (rank + 2) / 2 : rank / 2;
    v.identity = cfg.sqrt_c_in_k ? "|im a| = 3^((rank+2)/2)" : "|im a| = 3^(rank/2)";
    v.consistent = ea == want;
    v.detail = "|im a| = 3^" + std::to_string(ea) + ", expected 3^" + std::to_string(want);
    return v;
  }
  long want = rank + (cfg.sqrt_c_in_k ? 1 : 0) + (cfg.sqrt_d_in_k ? 1 : 0);
  if (cfg.sqrt_c_in_k && cfg.sqrt_d_in_k) {
    v.detail = "sqrt(c) and sqrt(d) in k force omega in k";
    return v;
  }
  v.identity = want == rank ? "|im a|*|im a'| = 3^rank" : "|im a|*|im a'| = 3^(rank+1)";
  v.consistent = ea + eap == want;
  v.detail = "|im a|*|im a'| = 3^" + std::to_string(ea + eap) + ", expected 3^" + std::to_string(want);
  return v;
}

}  // namespace cubebr
