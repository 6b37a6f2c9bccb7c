#include "cubebr/pipeline.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cubebr/brauer.hpp"
#include "cubebr/clifford.hpp"
#include "cubebr/factor.hpp"

namespace cubebr {

using nlohmann::json;

namespace {

// ---- serialization helpers -------------------------------------------------

json jrat(const Rat& x) { return to_string(x); }

json jquad(const QuadFieldElem& x) { return {{"a", to_string(x.a)}, {"b", to_string(x.b)}, {"m", x.m}}; }

json jpoint(const RatPoint& P) {
  if (P.inf) return "O";
  return {{"r", to_string(P.x)}, {"s", to_string(P.y)}};
}

json jclass(const CubeClass& c) { return {{"label", c.label()}, {"rep", jquad(c.rep)}}; }

json jgroup(const CubeClassGroup& g) {
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back(jclass(b));
  return {{"basis", basis}, {"label", g.label()}, {"order", to_string(g.order())}, {"field_m", g.field_m()}};
}

json jinv(const InvariantTable& t) {
  json o = json::object();
  for (const auto& e : t)
    if (e.thirds % 3) o[e.prime] = to_string(thirds_to_rat(e.thirds));
  return o;
}

Rat rational_part(const QuadFieldElem& x, const char* what) {
  if (x.b != 0) throw MathError(std::string(what) + " is not rational");
  return x.a;
}

json jform(const BinaryCubicForm& f) {
  auto raw = f.raw();
  json r = json::array();
  for (const auto& x : raw) r.push_back(jrat(rational_part(x, "form coefficient")));
  HessianData h = hessian(f);
  return {{"A", jrat(f.A.a)},
          {"B", jrat(f.B.a)},
          {"C", jrat(f.C.a)},
          {"D", jrat(f.D.a)},
          {"raw", r},
          {"text", f.str()},
          {"hessian", {{"R", jrat(h.R.a)}, {"S", jrat(h.S.a)}, {"T", jrat(h.T.a)}}}};
}

json jcurve(const CurveData& E) {
  json pts = json::array();
  for (const auto& P : E.points) pts.push_back(jpoint(P));
  json tors = json::array();
  for (const auto& P : E.torsion.points) tors.push_back(jpoint(P));
  return {{"c", jrat(E.c_input)},
          {"c_normalized", to_string(E.model.c_norm)},
          {"scale_u", jrat(E.model.u)},
          {"sqrt_c", jquad(E.sqrt_c)},
          {"torsion", {{"order", E.torsion.order}, {"structure", E.torsion.label()}, {"points", tors}}},
          {"points", pts}};
}

json jimage(const ImageResult& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json o = {{"curve", x.curve}, {"label", x.label}, {"class", jclass(x.cls)}};
    o["point"] = x.point ? jpoint(*x.point) : json(nullptr);
    w.push_back(o);
  }
  return {{"map", r.map},
          {"field_m", r.field_m},
          {"lower", jgroup(r.lower)},
          {"upper", r.upper ? jgroup(*r.upper) : json(nullptr)},
          {"witnesses", w},
          {"status", to_string(r.status)},
          {"proof", r.proof}};
}

json jverdict(const RankVerdict& v) {
  return {{"consistent_with_lower_bounds", v.consistent}, {"identity", v.identity}, {"detail", v.detail}};
}

std::string minpoly_text(const Rat& r, const Rat& s) {
  auto term = [](const Rat& c, const std::string& mono) {
    std::string out = c < 0 ? " - " : " + ";
    Rat a = abs(c);
    if (mono.empty()) return out + to_string(a);
    return out + (a == 1 ? "" : to_string(a) + "*") + mono;
  };
  std::string s3 = "X^3";
  if (r != 0) s3 += term(-3 * r, "X");
  if (s != 0) s3 += term(-2 * s, "");
  return s3;
}

int severity(Certainty c) {
  switch (c) {
    case Certainty::Proved:
      return 0;
    case Certainty::LowerBoundOnly:
      return 1;
    case Certainty::NeedsRank:
      return 2;
    case Certainty::Inconsistent:
      return 3;
  }
  return 3;
}

Certainty worst(Certainty a, Certainty b) { return severity(a) >= severity(b) ? a : b; }

std::optional<CubeClassGroup> upper_bound_for(const QuadFieldElem& sqrt_c) {
  if (sqrt_c.b == 0) return alpha_upper_bound_q_rational(sqrt_c.a);
  if (sqrt_c.m == -3) return alpha_upper_bound_q_twisted(sqrt_c);
  return std::nullopt;
}

std::vector<RatPoint> points_for(const JobConfig& cfg, const std::string& curve) {
  std::vector<RatPoint> out;
  for (const auto& p : cfg.extra_points)
    if (p.curve == curve) out.push_back(RatPoint::affine(p.r, p.s));
  return out;
}

struct PairImages {
  ImageResult a, ap;
  RankVerdict verdict;
  Disjointness dis;
  Certainty status = Certainty::Proved;
};

PairImages rational_images(const CurveData& E, const CurveData& Ep, std::optional<long> rank) {
  PairImages out;
  out.a = alpha_lower("alpha", E, E.sqrt_c.m, "E");
  out.a.upper = upper_bound_for(E.sqrt_c);
  out.ap = alpha_lower("alpha_prime", Ep, Ep.sqrt_c.m, "E'");
  out.ap.upper = upper_bound_for(Ep.sqrt_c);
  RankLaw law{rank, {E.sqrt_c.b == 0, Ep.sqrt_c.b == 0, false}};
  settle_pair(out.a, out.ap, law, out.verdict);
  if (out.a.field_m == -3 && out.ap.field_m == 1) out.dis = disjointness_check(out.a.lower, out.ap.lower);
  else if (out.ap.field_m == -3 && out.a.field_m == 1) out.dis = disjointness_check(out.ap.lower, out.a.lower);
  else out.dis.detail = "images live in different quadratic fields; no common ambient group";
  out.status = worst(out.a.status, out.ap.status);
  if (out.dis.checked && !out.dis.disjoint) out.status = Certainty::Inconsistent;
  return out;
}

json jdisjoint(const Disjointness& d) {
  return {{"checked", d.checked},
          {"disjoint", d.disjoint},
          {"intersection", jgroup(d.intersection)},
          {"detail", d.detail}};
}

json jrank(std::optional<long> value, const std::string& provenance, const std::string& citation) {
  return {{"value", value ? json(*value) : json(nullptr)}, {"provenance", provenance}, {"citation", citation}};
}

json jgroup_order(const std::vector<InvariantTable>& tables, bool complete, Certainty images) {
  json o;
  if (!complete) {
    o["order"] = nullptr;
    o["exact"] = false;
    o["detail"] = "some invariant tables are incomplete";
    return o;
  }
  Int n = group_order(tables);
  o["order"] = to_string(n);
  o["exact"] = images == Certainty::Proved;
  o["detail"] = images == Certainty::Proved ? "order of the span of the invariant vectors"
                                            : "lower bound: the image of alpha is not proved";
  return o;
}

struct SectionOut {
  json j;
  Certainty status;
};

// ---- diagonal over Q -------------------------------------------------------

SectionOut diagonal_q(const Rat& a, const CurveData& E, const CurveData& Ep, const JobConfig& cfg) {
  auto im = rational_images(E, Ep, cfg.rank);
  json gens = json::array();
  std::vector<InvariantTable> tables;
  bool complete = true;
  for (const auto& c : relative_brauer_rational(a, im.a, E.sqrt_c)) {
    Rat disc = 108 * (c.r * c.r * c.r - c.s * c.s);
    bool has_inv = c.xi.m == -3 || c.xi.b == 0;
    complete = complete && has_inv;
    tables.push_back(c.invariants);
    gens.push_back({{"type", "cyclic"},
                    {"minpoly", minpoly_text(c.r, c.s)},
                    {"r", jrat(c.r)},
                    {"s", jrat(c.s)},
                    {"slot", jrat(c.slot)},
                    {"witness", jpoint(c.witness)},
                    {"xi", jquad(c.xi)},
                    {"discriminant", jrat(disc)},
                    {"discriminant_is_square", rat_sqrt(disc).has_value()},
                    {"invariants", has_inv ? jinv(c.invariants) : json(nullptr)},
                    {"split", has_inv ? json(c.invariants.empty()) : json(nullptr)}});
  }
  SectionOut out;
  out.status = im.status;
  out.j = {{"field", "Q"},
           {"rank", jrank(cfg.rank, cfg.rank ? "user-supplied" : "not supplied", cfg.rank_citation)},
           {"rank_check", jverdict(im.verdict)},
           {"images", {{"alpha", jimage(im.a)}, {"alpha_prime", jimage(im.ap)}}},
           {"disjointness", jdisjoint(im.dis)},
           {"generators", gens},
           {"relative_brauer_group", jgroup_order(tables, complete, im.status)},
           {"status", to_string(out.status)}};
  return out;
}

// ---- diagonal over Q(omega) ------------------------------------------------

SectionOut diagonal_k(const Rat& a, const Rat& b, const CurveData& E, const CurveData& Ep, std::optional<long> rank_k,
                      const std::string& provenance, const std::string& citation) {
  ImageResult im = alpha_lower_k(E, Ep);
  im.upper = alpha_upper_bound_k(E.sqrt_c);
  RankVerdict v;
  settle_single_k(im, rank_k, true, v);
  json gens = json::array();
  std::vector<InvariantTable> tables;
  for (const auto& s : relative_brauer_diagonal(a, b, im.lower, E.sqrt_c)) {
    tables.push_back(s.invariants);
    gens.push_back({{"type", "symbol"},
                    {"display", s.display},
                    {"t", jquad(s.t)},
                    {"u", jquad(s.u)},
                    {"invariants", jinv(s.invariants)},
                    {"split", s.invariants.empty()}});
  }
  SectionOut out;
  out.status = im.status;
  out.j = {{"field", "Q(omega)"},
           {"rank", jrank(rank_k, provenance, citation)},
           {"rank_check", jverdict(v)},
           {"images", {{"alpha", jimage(im)}}},
           {"generators", gens},
           {"relative_brauer_group", jgroup_order(tables, true, im.status)},
           {"status", to_string(out.status)}};
  return out;
}

// ---- nondiagonal over Q ----------------------------------------------------

SectionOut nondiagonal_q(const BinaryCubicForm& f, const Rat& delta, const CurveData& E, const CurveData& Ep,
                         const JobConfig& cfg, json& twist) {
  long mL = static_cast<long>(squarefree_part(delta.get_num() * delta.get_den()).get_si());
  Diagonalization dL = diagonalize(f, mL);
  if (!dL.diagonalizable) throw MathError("form does not diagonalize over Q(sqrt " + std::to_string(mL) + ")");
  TwistParameters tp = twist_parameters(dL.a, dL.b);
  QuadFieldElem t = tp.minus_b_over_a;
  bool normalized = false;
  if (t * t.conj() != QuadFieldElem(1)) {
    if (!rat_cube_root(t.norm())) throw MathError("twist parameter is not in the twisted subgroup");
    t = normalize_twisted(t);
    normalized = true;
  }
  bool inverse_ok = t * t.conj() == QuadFieldElem(1);
  twist = {{"L_m", mL},
           {"diagonal_over_L", {{"a", jquad(dL.a)}, {"b", jquad(dL.b)}}},
           {"sqrt_delta", jquad(dL.sqrt_delta)},
           {"t", jquad(t)},
           {"t_normalized", normalized},
           {"t_times_conj_t_is_one", inverse_ok},
           {"parameters", {jquad(tp.minus_b_over_a), jquad(tp.a), jquad(tp.b)}}};

  auto im = rational_images(E, Ep, cfg.rank);
  json gens = json::array();
  std::vector<InvariantTable> tables;
  bool complete = true;
  for (const auto& w : im.a.witnesses) {
    CupProduct cp = cup_product(t, w, cfg.invariant_primes);
    complete = complete && cp.complete;
    tables.push_back(cp.profile);
    json cert = json::array();
    for (const auto& pc : cp.certificate) {
      json embs = json::array();
      for (const auto& e : pc.embeddings) {
        json ej = {{"embedding", e.embedding},
                   {"v_t", e.v_t},
                   {"v_u", e.v_u},
                   {"tame_residue", e.tame_residue},
                   {"character", e.character},
                   {"invariant_local", to_string(thirds_to_rat(e.thirds_local))}};
        ej["t_residue_is_cube"] = e.t_residue_is_cube ? json(*e.t_residue_is_cube) : json(nullptr);
        embs.push_back(ej);
      }
      cert.push_back({{"p", to_string(pc.p)},
                      {"status", pc.status},
                      {"embeddings", embs},
                      {"invariant", pc.thirds ? json(to_string(thirds_to_rat(*pc.thirds))) : json(nullptr)},
                      {"detail", pc.detail}});
    }
    gens.push_back({{"type", "cup_product"},
                    {"t", jquad(cp.t)},
                    {"u", jclass(cp.u)},
                    {"witness", jpoint(cp.witness)},
                    {"certificate", cert},
                    {"complete", cp.complete},
                    {"nonsplit", cp.nonsplit},
                    {"invariants", jinv(cp.profile)},
                    {"inverse_invariants", jinv(cp.inverse_profile)},
                    {"ambiguity", "the class is determined up to inverse by the choices of sqrt(-3) and sqrt(Delta); "
                                  "both invariant profiles are listed"}});
  }
  SectionOut out;
  out.status = im.status;
  if (!inverse_ok) out.status = Certainty::Inconsistent;
  out.j = {{"field", "Q"},
           {"rank", jrank(cfg.rank, cfg.rank ? "user-supplied" : "not supplied", cfg.rank_citation)},
           {"rank_check", jverdict(im.verdict)},
           {"images", {{"alpha", jimage(im.a)}, {"alpha_prime", jimage(im.ap)}}},
           {"disjointness", jdisjoint(im.dis)},
           {"generators", gens},
           {"relative_brauer_group", jgroup_order(tables, complete, im.status)},
           {"status", to_string(out.status)}};
  return out;
}

json clifford_json(const CliffordSummary& s) {
  json ids = json::object();
  for (const auto& [n, t] : s.identities)
    ids[n] = {{"pass", t.pass}, {"fail", t.fail}, {"not_evaluable", t.not_evaluable}};
  return {{"seed", s.seed},
          {"trials_requested", s.trials_requested},
          {"trials_run", s.trials_run},
          {"fields", s.fields},
          {"identities", ids},
          {"skipped", s.skipped},
          {"rewriter", {{"words", s.rewriter_words}, {"agree", s.rewriter_agree}}},
          {"failures", s.failures},
          {"all_pass", s.all_pass()}};
}

Rat parse_number(const json& v, const std::string& key) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return parse_rat(std::to_string(v.get<long long>()));
  throw MathError("'" + key + "' must be an integer or a \"p/q\" string");
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw MathError(where + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw MathError("unknown key '" + k + "' in " + where);
}

}  // namespace

// ---- config ----------------------------------------------------------------

JobConfig parse_config(const json& j) {
  check_keys(j,
             {"schema", "field", "form", "rank", "rank_L", "rank_citation", "extra_points", "search_bound", "denom_bound",
              "invariant_primes", "verify_clifford", "seed", "description"},
             "config");
  JobConfig c;
  c.echo = j;
  if (j.contains("schema") && j["schema"] != 1) throw MathError("unsupported config schema");
  if (j.contains("field")) c.field = j["field"].get<std::string>();
  if (c.field != "Q" && c.field != "Q(omega)") throw MathError("field must be \"Q\" or \"Q(omega)\"");
  if (j.contains("form")) {
    const json& f = j["form"];
    bool diag = f.contains("a") || f.contains("b");
    bool gen = f.contains("A") || f.contains("B") || f.contains("C") || f.contains("D");
    if (diag == gen) throw MathError("form must be exactly one of {a, b} or {A, B, C, D}");
    if (diag) {
      check_keys(f, {"a", "b"}, "form");
      if (!f.contains("a") || !f.contains("b")) throw MathError("diagonal form needs both a and b");
      c.a = parse_number(f["a"], "a");
      c.b = parse_number(f["b"], "b");
      if (c.a == 0 || c.b == 0) throw MathError("a and b must be nonzero");
    } else {
      check_keys(f, {"A", "B", "C", "D", "normalization"}, "form");
      c.diagonal = false;
      const char* names[] = {"A", "B", "C", "D"};
      for (int i = 0; i < 4; ++i) {
        if (!f.contains(names[i])) throw MathError(std::string("form is missing ") + names[i]);
        c.coeffs[i] = parse_number(f[names[i]], names[i]);
      }
      if (f.contains("normalization")) c.normalization = f["normalization"].get<std::string>();
      if (c.normalization != "raw" && c.normalization != "normalized")
        throw MathError("normalization must be \"raw\" or \"normalized\"");
    }
  } else {
    throw MathError("config has no form");
  }
  if (j.contains("rank") && !j["rank"].is_null()) c.rank = j["rank"].get<long>();
  if (j.contains("rank_L") && !j["rank_L"].is_null()) c.rank_L = j["rank_L"].get<long>();
  if (c.rank && *c.rank < 0) throw MathError("rank must be nonnegative");
  if (c.rank_L && *c.rank_L < 0) throw MathError("rank_L must be nonnegative");
  if (c.rank_L && c.field == "Q(omega)") throw MathError("rank_L applies to field Q only; give the rank over Q(omega) as rank");
  if (j.contains("rank_citation")) c.rank_citation = j["rank_citation"].get<std::string>();
  if (j.contains("extra_points")) {
    for (const auto& p : j["extra_points"]) {
      check_keys(p, {"r", "s", "curve"}, "extra_points entry");
      PointInput pi{parse_number(p.at("r"), "r"), parse_number(p.at("s"), "s"), "E"};
      if (p.contains("curve")) pi.curve = p["curve"].get<std::string>();
      if (pi.curve != "E" && pi.curve != "E'") throw MathError("point curve must be \"E\" or \"E'\"");
      c.extra_points.push_back(pi);
    }
  }
  if (j.contains("search_bound")) c.search_bound = j["search_bound"].get<long>();
  if (j.contains("denom_bound")) c.denom_bound = j["denom_bound"].get<long>();
  if (c.search_bound < 1 || c.denom_bound < 1) throw MathError("search bounds must be at least 1");
  if (j.contains("invariant_primes"))
    for (const auto& p : j["invariant_primes"]) c.invariant_primes.push_back(Int(p.get<long>()));
  if (j.contains("verify_clifford")) {
    const json& v = j["verify_clifford"];
    if (v.is_boolean()) c.verify_clifford = v.get<bool>();
    else {
      check_keys(v, {"trials", "fields"}, "verify_clifford");
      c.verify_clifford = true;
      if (v.contains("trials")) c.clifford_trials = v["trials"].get<int>();
      if (v.contains("fields")) c.clifford_fields = v["fields"].get<std::vector<std::uint64_t>>();
    }
    if (c.clifford_trials < 1) throw MathError("trial count must be at least 1");
  }
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  return c;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MathError("config " + path + " is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

// ---- run -------------------------------------------------------------------

JobResult run_job(const JobConfig& cfg) {
  json rep;
  rep["schema"] = 1;
  rep["config"] = cfg.echo;
  json notes = json::array();
  notes.push_back(
      "Mordell-Weil ranks are external data and are not computed here; every conclusion that uses a rank is "
      "conditional on it and is cross-checked against the cardinality identities.");

  BinaryCubicForm f;
  if (cfg.diagonal) f = BinaryCubicForm::diagonal(QuadFieldElem(cfg.a), QuadFieldElem(cfg.b));
  else if (cfg.normalization == "raw")
    f = BinaryCubicForm::from_raw(QuadFieldElem(cfg.coeffs[0]), QuadFieldElem(cfg.coeffs[1]), QuadFieldElem(cfg.coeffs[2]),
                                  QuadFieldElem(cfg.coeffs[3]));
  else
    f = BinaryCubicForm{QuadFieldElem(cfg.coeffs[0]), QuadFieldElem(cfg.coeffs[1]), QuadFieldElem(cfg.coeffs[2]),
                        QuadFieldElem(cfg.coeffs[3])};
  Rat delta = rational_part(discriminant(f), "discriminant");
  if (delta == 0) throw MathError("degenerate form: discriminant is zero");
  json jf = jform(f);
  jf["input"] = cfg.diagonal ? "diagonal" : cfg.normalization;
  jf["discriminant"] = jrat(delta);
  auto sq = rat_sqrt(delta);
  jf["discriminant_is_square"] = sq.has_value();
  rep["form"] = jf;

  Rat c = -27 * delta;
  CurveData E = make_curve_data(c, cfg.search_bound, cfg.denom_bound, points_for(cfg, "E"));
  CurveData Ep = make_curve_data(-27 * c, cfg.search_bound, cfg.denom_bound, points_for(cfg, "E'"));
  rep["jacobian"] = {{"E", jcurve(E)}, {"E'", jcurve(Ep)}};

  std::vector<SectionOut> sections;
  Diagonalization dg = diagonalize(f, 1);
  if (dg.diagonalizable) {
    Rat a = rational_part(dg.a, "a"), b = rational_part(dg.b, "b");
    rep["diagonalization"] = {{"a", jrat(a)},
                              {"b", jrat(b)},
                              {"branch", dg.branch},
                              {"sqrt_delta", jquad(dg.sqrt_delta)},
                              {"matrix", json::array({json::array({jrat(dg.Q.alpha.a), jrat(dg.Q.beta.a)}),
                                                      json::array({jrat(dg.Q.gamma.a), jrat(dg.Q.delta.a)})})}};
    TwistParameters tp = twist_parameters(QuadFieldElem(a), QuadFieldElem(b));
    rep["twist_parameters"] = {jrat(tp.minus_b_over_a.a), jrat(tp.a.a), jrat(tp.b.a)};
    rep["pipeline"] = "diagonal";
    if (cfg.field == "Q") {
      sections.push_back(diagonal_q(a, E, Ep, cfg));
      std::optional<long> rk = cfg.rank_L;
      std::string prov = "user-supplied";
      if (!rk && cfg.rank) {
        rk = 2 * *cfg.rank;
        prov = "derived: twice the rank over Q";
      } else if (!rk) {
        prov = "not supplied";
      }
      sections.push_back(diagonal_k(a, b, E, Ep, rk, prov, cfg.rank_citation));
    } else {
      sections.push_back(
          diagonal_k(a, b, E, Ep, cfg.rank, cfg.rank ? "user-supplied" : "not supplied", cfg.rank_citation));
    }
  } else {
    if (cfg.field == "Q(omega)")
      throw MathError("nondiagonal forms over Q(omega) are not supported; only forms diagonal over Q are accepted");
    rep["diagonalization"] = nullptr;
    rep["pipeline"] = "nondiagonal";
    json twist;
    sections.push_back(nondiagonal_q(f, delta, E, Ep, cfg, twist));
    rep["twist"] = twist;
  }

  Certainty overall = Certainty::Proved;
  json js = json::array();
  for (const auto& s : sections) {
    js.push_back(s.j);
    overall = worst(overall, s.status);
  }
  rep["sections"] = js;

  int code = overall == Certainty::Proved ? 0 : overall == Certainty::Inconsistent ? 1 : 2;
  if (cfg.verify_clifford) {
    auto sum = run_clifford_trials(cfg.seed, cfg.clifford_trials, cfg.clifford_fields);
    rep["clifford"] = clifford_json(sum);
    if (!sum.all_pass()) code = 1;
  }
  rep["notes"] = notes;
  rep["status"] = to_string(overall);
  return {rep, to_string(overall), code};
}

JobResult run_verify(const JobConfig& cfg) {
  auto sum = run_clifford_trials(cfg.seed, cfg.clifford_trials, cfg.clifford_fields);
  json rep = {{"schema", 1}, {"clifford", clifford_json(sum)}};
  bool ok = sum.all_pass();
  rep["status"] = ok ? "pass" : "fail";
  return {rep, ok ? "pass" : "fail", ok ? 0 : 1};
}

}  // namespace cubebr
