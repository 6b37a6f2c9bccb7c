#include "cubebr/brauer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubebr/factor.hpp"

namespace cubebr {

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::Proved:
      return "proved";
    case Certainty::LowerBoundOnly:
      return "lower-bound-only";
    case Certainty::NeedsRank:
      return "needs-rank";
    case Certainty::Inconsistent:
      return "inconsistent";
  }
  return "";
}

InvariantTable invariants_of(const AlgebraDescriptor& d) {
  if (auto* s = std::get_if<SymbolAlgebra>(&d)) return s->invariants;
  if (auto* c = std::get_if<CyclicAlgebra>(&d)) return c->invariants;
  return std::get<CupProduct>(d).profile;
}

Rat cube_reduce(const Rat& a) {
  if (a == 0) throw MathError("zero has no cube class");
  Int out = sign(a);
  auto add = [&](const Int& n, int dir) {
    for (const auto& [p, e] : factor_integer(n).factors) {
      int r = ((dir * e) % 3 + 3) % 3;
      out *= int_pow(p, static_cast<unsigned long>(r));
    }
  };
  add(a.get_num(), 1);
  add(a.get_den(), -1);
  return Rat(out);
}

// ---- curve data ------------------------------------------------------------

CurveData make_curve_data(const Rat& c, long search_bound, long denom_bound,
                          const std::vector<RatPoint>& extra_points) {
  CurveData E;
  E.c_input = c;
  E.model = normalize_model(c);
  Rat cn(E.model.c_norm);
  E.sqrt_c = positive_sqrt(cn);
  E.torsion = torsion_subgroup(E.model.c_norm);
  RatCurve normalized{Rat(E.model.c_norm)};
  std::vector<RatPoint> pts;
  for (const auto& P : E.torsion.points)
    if (!P.inf) pts.push_back(P);
  for (const auto& P : search_points(E.model.c_norm, search_bound, denom_bound)) pts.push_back(P);
  for (const auto& P : extra_points) {
    if (!normalized.contains(P))
      throw MathError("supplied point " + to_string(P) + " is not on Y^2 = X^3 + " + to_string(E.model.c_norm));
    if (!P.inf) pts.push_back(P);
  }
  std::sort(pts.begin(), pts.end(), point_order_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  E.points = pts;
  return E;
}

// ---- upper bounds ----------------------------------------------------------

namespace {

std::vector<CubeClass> eis_prime_classes(const QuadFieldElem& x) {
  std::vector<CubeClass> out;
  auto f = factor_q_omega(x.b == 0 ? x.with_m(-3) : x);
  for (const auto& [P, e] : f.exps)
    if (e % 3) out.push_back(CubeClass::from_vector({{PrimeKey::eisenstein(P), 1}}, -3));
  return out;
}

}  // namespace

CubeClassGroup alpha_upper_bound_k(const QuadFieldElem& sqrt_c) {
  if (sqrt_c.b != 0 && sqrt_c.m != -3) throw MathError("sqrt(c) does not lie in Q(omega)");
  auto gens = eis_prime_classes(QuadFieldElem(2) * sqrt_c);
  gens.push_back(CubeClass::from_vector({{PrimeKey::omega(), 1}}, -3));
  return span(gens, -3);
}

CubeClassGroup alpha_upper_bound_q_twisted(const QuadFieldElem& sqrt_c) {
  auto f = factor_q_omega(QuadFieldElem(2) * (sqrt_c.b == 0 ? sqrt_c.with_m(-3) : sqrt_c));
  std::vector<CubeClass> gens{CubeClass::from_vector({{PrimeKey::omega(), 1}}, -3)};
  std::set<Int> split;
  for (const auto& [P, e] : f.exps)
    if (P.kind == EisPrime::Kind::Split && e % 3) split.insert(P.p);
  for (const Int& p : split) {
    EisPrime P = split_prime_above(p);
    EisPrime Q{EisPrime::Kind::Split, P.x, -P.y, P.p};
    gens.push_back(CubeClass::from_vector({{PrimeKey::eisenstein(P), 1}, {PrimeKey::eisenstein(Q), 2}}, -3));
  }
  return span(gens, -3);
}

CubeClassGroup alpha_upper_bound_q_rational(const Rat& sqrt_c) {
  std::vector<CubeClass> gens;
  for (const Int& p : non_cube_primes(2 * sqrt_c)) gens.push_back(CubeClass::make(QuadFieldElem(Rat(p)), 1));
  return span(gens, 1);
}

// ---- lower bounds ----------------------------------------------------------

namespace {

void greedy_add(ImageResult& r, Witness w) {
  if (r.lower.contains(w.cls)) return;
  r.witnesses.push_back(std::move(w));
  std::vector<CubeClass> cls;
  for (const auto& x : r.witnesses) cls.push_back(x.cls);
  r.lower = span(cls, r.field_m);
}

}  // namespace

ImageResult alpha_lower(const std::string& map, const CurveData& E, long field_m, const std::string& curve_name) {
  ImageResult r;
  r.map = map;
  r.field_m = field_m;
  r.lower = CubeClassGroup(field_m);
  Rat cn(E.model.c_norm);
  for (const auto& P : E.points)
    greedy_add(r, {curve_name, P, to_string(P), alpha(P, cn, E.sqrt_c, field_m)});
  return r;
}

ImageResult alpha_lower_k(const CurveData& E, const CurveData& Ep) {
  ImageResult r;
  r.map = "alpha_k";
  r.field_m = -3;
  r.lower = CubeClassGroup(-3);
  auto as_k = [](const QuadFieldElem& x) { return x.b == 0 ? x.with_m(-3) : x; };
  QuadFieldElem sc = as_k(E.sqrt_c);
  if (sc.m != -3) throw MathError("sqrt(c) is not in Q(omega)");
  Rat cn(E.model.c_norm);
  greedy_add(r, {"E(k)", std::nullopt, "(0, " + E.sqrt_c.str() + ")", CubeClass::make(2 * sc, -3)});
  greedy_add(r, {"E(k)", std::nullopt, "(0, -" + E.sqrt_c.str() + ")", CubeClass::make(QuadFieldElem(4 * cn), -3)});
  for (const auto& P : E.points) greedy_add(r, {"E", P, to_string(P), alpha(P, cn, E.sqrt_c, -3)});
  Rat dn(Ep.model.c_norm);
  for (const auto& P : Ep.points) greedy_add(r, {"E'", P, to_string(P), alpha(P, dn, Ep.sqrt_c, -3)});
  return r;
}

// ---- certainty -------------------------------------------------------------

namespace {

bool determined(const ImageResult& r) { return r.upper && r.upper->dim() == r.lower.dim(); }

}  // namespace

void settle_pair(ImageResult& a, ImageResult& ap, const RankLaw& law, RankVerdict& verdict) {
  int la = a.lower.dim(), lap = ap.lower.dim();
  int extra = (law.cfg.sqrt_c_in_k ? 1 : 0) + (law.cfg.sqrt_d_in_k ? 1 : 0);
  bool da = determined(a), dap = determined(ap);
  if (!law.rank) {
    a.status = da ? Certainty::Proved : Certainty::NeedsRank;
    ap.status = dap ? Certainty::Proved : Certainty::NeedsRank;
    if (da) a.proof = "lower bound meets the upper bound";
    if (dap) ap.proof = "lower bound meets the upper bound";
    verdict.consistent = true;
    verdict.identity = "no rank supplied";
    verdict.detail = da && dap ? "rank implied: " + std::to_string(la + lap - extra) : "rank needed to pin the images";
    return;
  }
  long target = *law.rank + extra;
  verdict = validate_rank_data(*law.rank, a.size(), ap.size(), law.cfg);
  if (la + lap == target) {
    a.status = ap.status = Certainty::Proved;
    a.proof = ap.proof = verdict.identity;
    return;
  }
  if (la + lap > target || (da && dap)) {
    a.status = ap.status = Certainty::Inconsistent;
    a.proof = ap.proof = verdict.detail;
    return;
  }
  a.status = da ? Certainty::Proved : Certainty::LowerBoundOnly;
  ap.status = dap ? Certainty::Proved : Certainty::LowerBoundOnly;
  if (da) {
    a.proof = "lower bound meets the upper bound";
    ap.proof = "size forced to 3^" + std::to_string(target - la) + " by " + verdict.identity + "; generators missing";
  } else if (dap) {
    ap.proof = "lower bound meets the upper bound";
    a.proof = "size forced to 3^" + std::to_string(target - lap) + " by " + verdict.identity + "; generators missing";
  } else {
    a.proof = ap.proof = "lower bounds only; " + verdict.identity + " needs 3^" + std::to_string(target);
  }
}

void settle_single_k(ImageResult& a, std::optional<long> rank_L, bool sqrt_c_in_k, RankVerdict& verdict) {
  int la = a.lower.dim();
  bool da = determined(a);
  if (!rank_L) {
    a.status = da ? Certainty::Proved : Certainty::NeedsRank;
    a.proof = da ? "lower bound meets the upper bound" : "rank needed";
    verdict.consistent = true;
    verdict.identity = "no rank supplied";
    verdict.detail = a.proof;
    return;
  }
  verdict = validate_rank_data(*rank_L, a.size(), a.size(), {sqrt_c_in_k, sqrt_c_in_k, true});
  if (*rank_L % 2 != 0 || *rank_L < 0) {
    a.status = Certainty::Inconsistent;
    a.proof = verdict.detail;
    return;
  }
  long target = sqrt_c_in_k ? (*rank_L + 2) / 2 : *rank_L / 2;
  if (la == target) {
    a.status = Certainty::Proved;
    a.proof = verdict.identity;
  } else if (la > target || da) {
    a.status = Certainty::Inconsistent;
    a.proof = verdict.detail;
  } else {
    a.status = Certainty::LowerBoundOnly;
    a.proof = "lower bound 3^" + std::to_string(la) + " below " + verdict.identity;
  }
}

// ---- generators ------------------------------------------------------------

std::vector<SymbolAlgebra> relative_brauer_diagonal(const Rat& a, const Rat& b, const CubeClassGroup& im_alpha,
                                                    const QuadFieldElem& sqrt_c) {
  if (im_alpha.field_m() != -3) throw MathError("symbol algebras need omega in the field");
  Rat slot = cube_reduce(a);
  QuadFieldElem sc = sqrt_c.b == 0 ? sqrt_c.with_m(-3) : sqrt_c;
  CubeClass torsion = CubeClass::make(2 * sc, -3);
  std::vector<SymbolAlgebra> out;
  for (const auto& xi : im_alpha.basis()) {
    SymbolAlgebra s;
    s.t = QuadFieldElem(slot);
    if (same_class(xi, torsion)) {
      s.u = QuadFieldElem(cube_reduce(b));
      s.display = "(" + to_string(slot) + ", b)_omega";
    } else {
      s.u = xi.rep;
      s.display = "(" + to_string(slot) + ", " + xi.label() + ")_omega";
    }
    s.invariants = nonzero(to_table(symbol_invariants(s.t, s.u)));
    out.push_back(s);
  }
  return out;
}

CyclicDescent cyclic_field_descent(const QuadFieldElem& xi) {
  if (xi.is_zero()) throw MathError("zero slot");
  auto r = rat_cube_root(xi.norm());
  if (!r) throw MathError("norm of " + xi.str() + " is not a rational cube: not in the twisted image");
  CyclicDescent d{*r, xi.trace(), false};
  d.split = !rational_roots_depressed_cubic(-3 * d.r, -d.trace).empty();
  return d;
}

std::vector<CyclicAlgebra> relative_brauer_rational(const Rat& a, const ImageResult& im_alpha, const QuadFieldElem& sqrt_c) {
  Rat slot = cube_reduce(a);
  std::vector<CyclicAlgebra> out;
  for (const auto& w : im_alpha.witnesses) {
    if (!w.point) throw MathError("generator " + w.cls.label() + " needs a rational witness point");
    const RatPoint& P = *w.point;
    CyclicAlgebra c;
    c.witness = P;
    c.slot = slot;
    c.xi = QuadFieldElem(P.y) + sqrt_c;
    auto d = cyclic_field_descent(c.xi);
    c.r = d.r;
    c.s = d.trace / 2;
    if (c.xi.m == -3 || c.xi.b == 0) c.invariants = nonzero(to_table(descend_to_q(symbol_invariants(slot, c.xi))));
    out.push_back(c);
  }
  return out;
}

CupProduct cup_product(const QuadFieldElem& t, const Witness& u, const std::vector<Int>& extra_primes) {
  CupProduct cp;
  cp.t = t;
  cp.u = u.cls;
  if (u.point) cp.witness = *u.point;
  const QuadFieldElem& uu = u.cls.rep;
  cp.complete = true;
  int total = 0;
  InvariantTable prof;
  for (const Int& p : cup_product_candidate_primes(t, uu, extra_primes)) {
    auto cert = cup_product_local(t, uu, p);
    if (!cert.thirds) cp.complete = false;
    else {
      total += *cert.thirds;
      prof.push_back({p.get_str(), *cert.thirds});
    }
    cp.certificate.push_back(cert);
  }
  PrimeCertificate three;
  three.p = 3;
  if (cp.complete) {
    three.status = "reciprocity";
    three.thirds = ((-total) % 3 + 3) % 3;
    prof.push_back({"3", *three.thirds});
  } else {
    three.status = "not-evaluable";
    three.detail = "reciprocity needs every other invariant";
  }
  cp.certificate.push_back(three);
  cp.profile = nonzero(prof);
  for (const auto& e : cp.profile) cp.inverse_profile.push_back({e.prime, (3 - e.thirds) % 3});
  cp.nonsplit = !cp.profile.empty();
  return cp;
}

Int group_order(const std::vector<InvariantTable>& tables) {
  std::vector<std::string> cols;
  for (const auto& t : tables)
    for (const auto& e : t)
      if (std::find(cols.begin(), cols.end(), e.prime) == cols.end()) cols.push_back(e.prime);
  std::vector<std::vector<int>> rows;
  for (const auto& t : tables) {
    std::vector<int> row(cols.size(), 0);
    for (const auto& e : t)
      row[std::find(cols.begin(), cols.end(), e.prime) - cols.begin()] = ((e.thirds % 3) + 3) % 3;
    rows.push_back(row);
  }
  return int_pow(Int(3), static_cast<unsigned long>(f3_rank(rows)));
}

Disjointness disjointness_check(const CubeClassGroup& im_alpha, const CubeClassGroup& im_alpha_prime) {
  Disjointness d;
  d.intersection = CubeClassGroup(-3);
  if (im_alpha.field_m() != -3 || im_alpha_prime.field_m() != 1) {
    d.detail = "images live in different quadratic fields; no common ambient group";
    return d;
  }
  std::vector<CubeClass> lifted;
  for (const auto& b : im_alpha_prime.basis()) lifted.push_back(CubeClass::make(b.rep.with_m(-3), -3));
  d.checked = true;
  d.intersection = intersection(im_alpha, span(lifted, -3));
  d.disjoint = d.intersection.dim() == 0;
  d.detail = d.disjoint ? "trivial intersection in Q(omega)*/cubes" : "nontrivial intersection: inconsistent data";
  return d;
}

}  // namespace cubebr
