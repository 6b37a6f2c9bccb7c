// One line per acceptance criterion; exit status is the number of failures.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cubebr/brauer.hpp"
#include "cubebr/clifford.hpp"
#include "cubebr/pipeline.hpp"

#ifndef CUBEBR_GOLDEN_DIR
#define CUBEBR_GOLDEN_DIR "tests/golden"
#endif

using namespace cubebr;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Check {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

fs::path golden(const std::string& name) { return fs::path(CUBEBR_GOLDEN_DIR) / name; }

JobConfig config(const std::string& name) { return load_config(golden(name + ".config.json").string()); }

json report(const std::string& name) { return run_job(config(name)).report; }

void matches_golden(Check& c, const std::string& name) {
  std::ifstream in(golden(name + ".report.json"));
  std::stringstream ss;
  ss << in.rdbuf();
  c.require(!ss.str().empty() && ss.str() == render(report(name)), name + " differs from its golden report");
}

const json& section(const json& r, const std::string& field) {
  for (const auto& s : r["sections"])
    if (s["field"] == field) return s;
  throw MathError("no section " + field);
}

std::set<std::string> displays(const json& s) {
  std::set<std::string> out;
  for (const auto& g : s["generators"]) out.insert(g.value("display", g.value("minpoly", std::string())));
  return out;
}

bool all_split(const json& s) {
  for (const auto& g : s["generators"])
    if (!g["invariants"].empty()) return false;
  return true;
}

QuadFieldElem eis(long x, long y) { return QuadFieldElem(x, y, -3); }

std::map<std::string, std::string> table(const InvariantTable& t) {
  std::map<std::string, std::string> out;
  for (const auto& e : nonzero(t)) out[e.prime] = to_string(thirds_to_rat(e.thirds));
  return out;
}

// ---- criteria --------------------------------------------------------------

std::string ab22(Check& c) {
  json q = report("ab22_q"), k = report("ab22_k");
  const json& sq = section(q, "Q");
  c.require(sq["images"]["alpha"]["lower"]["label"] == "{1}", "im alpha over Q is not {1}");
  c.require(sq["images"]["alpha"]["status"] == "proved", "im alpha over Q not proved");
  c.require(sq["relative_brauer_group"]["order"] == "1", "Br over Q is not {0}");
  for (const json* s : {&section(q, "Q(omega)"), &section(k, "Q(omega)")}) {
    c.require(displays(*s) == std::set<std::string>{"(2, 2)_omega", "(2, 11)_omega"}, "generators over Q(omega)");
    c.require(all_split(*s), "a generator over Q(omega) is nonsplit");
    c.require((*s)["relative_brauer_group"]["order"] == "1", "Br over Q(omega) is not {0}");
  }
  matches_golden(c, "ab22_q");
  matches_golden(c, "ab22_k");
  return "im(alpha) = {1} proved over Q; (2, 2)_omega and (2, 11)_omega split";
}

std::string ab30(Check& c) {
  json r = report("ab30");
  const json& sq = section(r, "Q");
  const json& ap = sq["images"]["alpha_prime"];
  c.require(ap["lower"]["label"] == "<2, 3, 5>" && ap["lower"]["order"] == "27", "im alpha' over Q");
  c.require(ap["status"] == "proved", "im alpha' not proved");
  c.require(sq["relative_brauer_group"]["order"] == "1", "Br over Q is not {0}");
  const json& ak = section(r, "Q(omega)")["images"]["alpha"];
  CurveData E = make_curve_data(Rat(-6075), 100, 2, {});
  CurveData Ep = make_curve_data(Rat(164025), 100, 2, {});
  ImageResult im = alpha_lower_k(E, Ep);
  CubeClassGroup expect = span({CubeClass::make(QuadFieldElem(2), -3), CubeClass::make(QuadFieldElem::eta(), -3),
                                CubeClass::make(QuadFieldElem(5), -3)},
                               -3);
  c.require(subgroup_of(expect, im.lower) && subgroup_of(im.lower, expect), "im alpha over Q(omega) != <2, sqrt(-3), 5>");
  c.require(ak["lower"]["order"] == "27" && ak["status"] == "proved", "im alpha over Q(omega) not proved of order 27");
  matches_golden(c, "ab30");
  return "im(alpha') = <2, 3, 5> of order 27, Br over Q = {0}, im(alpha) over Q(omega) = <2, sqrt(-3), 5>";
}

std::string ab26(Check& c) {
  json r = report("ab26");
  const json& sq = section(r, "Q");
  c.require(displays(sq) == std::set<std::string>{"X^3 - 117*X - 468"}, "cyclic generator over Q");
  auto p = eis(1, 2), q = eis(1, -2);
  using T = std::map<std::string, std::string>;
  T t1 = table(to_table(symbol_invariants(3, 2 * p * p)));
  T t2 = table(to_table(symbol_invariants(3, 2 * q * q)));
  T t3 = table(to_table(symbol_invariants(3, p * q * q)));
  c.require(t1 == T{{"1+2*sqrt(-3)", "2/3"}, {"sqrt(-3)", "1/3"}}, "(3, 2p^2) invariants");
  c.require(t2 == T{{"1-2*sqrt(-3)", "1/3"}, {"sqrt(-3)", "2/3"}}, "(3, 2q^2) invariants");
  c.require(t3 == T{{"1+2*sqrt(-3)", "1/3"}, {"1-2*sqrt(-3)", "1/3"}, {"sqrt(-3)", "1/3"}}, "(3, pq^2) invariants");
  CurveData E = make_curve_data(Rat(-4563), 100, 2, {RatPoint::affine(39, 234)});
  CurveData Ep = make_curve_data(Rat(123201), 100, 2, {});
  ImageResult im = alpha_lower_k(E, Ep);
  for (const auto& x : {2 * p * p, 2 * q * q, p * q * q})
    c.require(im.lower.contains(CubeClass::make(x, -3)), "slot " + x.str() + " not in im alpha over Q(omega)");
  matches_golden(c, "ab26");
  return "minpoly X^3 - 117X - 468; (3,2p^2): p 2/3, sqrt(-3) 1/3; (3,2q^2): q 1/3, sqrt(-3) 2/3; (3,pq^2): 1/3 x3";
}

std::string torsion_cases(Check& c) {
  json r = report("c_minus432");
  const json& E = r["jacobian"]["E"];
  c.require(E["c_normalized"] == "-432" && E["torsion"]["structure"] == "Z/3", "torsion of c = -432");
  std::set<std::string> pts;
  for (const auto& P : E["torsion"]["points"])
    if (P.is_object()) pts.insert(P["r"].get<std::string>() + "," + P["s"].get<std::string>());
  c.require(pts == std::set<std::string>{"12,36", "12,-36"}, "torsion points (12, +-36)");
  const json& sq = section(r, "Q");
  c.require(sq["images"]["alpha"]["lower"]["label"] == "<omega>" && sq["images"]["alpha"]["status"] == "proved",
            "im alpha = <omega>");
  c.require(displays(sq) == std::set<std::string>{"X^3 - 36*X - 72"}, "minpoly X^3 - 36X - 72");
  json s = report("c_minus27");
  c.require(s["jacobian"]["E"]["c_normalized"] == "-27", "c = -27");
  c.require(section(s, "Q")["relative_brauer_group"]["order"] == "1", "Br over Q for c = -27");
  const json& sk = section(s, "Q(omega)");
  c.require(displays(sk) == std::set<std::string>{"(7, b)_omega"}, "generator (a, b)_omega for c = -27");
  c.require(sk["relative_brauer_group"]["order"] == "3", "Br over Q(omega) for c = -27 has order 3");
  matches_golden(c, "c_minus432");
  matches_golden(c, "c_minus27");
  return "c = -432: Z/3 on (12, +-36), im(alpha) = <omega>, X^3 - 36X - 72; c = -27: {0} over Q, <(a, b)_omega>";
}

std::string square_discriminant(Check& c) {
  json f = report("form_13_21_57_m5"), g = report("ab22_q");
  c.require(f["form"]["discriminant"] == "88209" && f["form"]["discriminant_is_square"] == true, "discriminant 297^2");
  c.require(f["pipeline"] == "diagonal", "diagonal pipeline");
  c.require(f["jacobian"]["E"]["c_normalized"] == g["jacobian"]["E"]["c_normalized"], "same Jacobian");
  for (const char* field : {"Q", "Q(omega)"}) {
    const json &a = section(f, field), &b = section(g, field);
    for (const auto& [k, v] : b["images"].items()) {
      c.require(a["images"][k]["lower"]["label"] == v["lower"]["label"], std::string(field) + " " + k + " image");
      c.require(a["images"][k]["status"] == v["status"], std::string(field) + " " + k + " status");
    }
    c.require(a["relative_brauer_group"]["order"] == "1" && b["relative_brauer_group"]["order"] == "1",
              std::string(field) + " groups trivial");
    c.require(all_split(a), std::string(field) + " generators split");
  }
  matches_golden(c, "form_13_21_57_m5");
  return "Delta = 88209 = 297^2; images and trivial groups agree with 2U^3 + 11V^3";
}

std::string nondiagonal(Check& c) {
  json r = report("form_4_0_12_4");
  c.require(r["form"]["discriminant"] == "320" && r["pipeline"] == "nondiagonal", "Delta = 320, nondiagonal");
  const json& tw = r["twist"];
  QuadFieldElem t(parse_rat(tw["t"]["a"]), parse_rat(tw["t"]["b"]), tw["t"]["m"].get<long>());
  c.require(t * t.conj() == QuadFieldElem(1), "tau(t) = t^-1 exactly");
  QuadFieldElem tp(Rat(3, 2), Rat(-1, 2), 5);
  c.require(is_cube(t / tp) || is_cube(t * tp), "t is not (3 - sqrt 5)/2 up to inverse modulo cubes");
  const json& s = section(r, "Q");
  c.require(s["generators"].size() == 1, "one cup product");
  const json& g = s["generators"][0];
  QuadFieldElem u(parse_rat(g["u"]["rep"]["a"]), parse_rat(g["u"]["rep"]["b"]), g["u"]["rep"]["m"].get<long>());
  c.require(same_class(CubeClass::make(u, -15), CubeClass::make(QuadFieldElem(9, 3, -15), -15)), "u = 3(3 + sqrt(-15))");
  std::set<int> vu;
  bool at2 = false;
  for (const auto& pc : g["certificate"]) {
    if (pc["p"] != "2") continue;
    at2 = true;
    for (const auto& e : pc["embeddings"]) {
      c.require(e["v_t"] == 0, "v(t) = 0 at 2");
      c.require(e["t_residue_is_cube"] == false, "t residue is a non-cube in F_4");
      vu.insert(e["v_u"].get<int>());
    }
  }
  c.require(at2 && vu == std::set<int>{1, 2}, "v(u) takes the values 1 and 2 at the primes over 2");
  using T = std::map<std::string, std::string>;
  std::set<T> profiles{g["invariants"].get<T>(), g["inverse_invariants"].get<T>()};
  c.require(profiles == std::set<T>{T{{"2", "1/3"}, {"3", "2/3"}}, T{{"2", "2/3"}, {"3", "1/3"}}}, "invariant profiles");
  c.require(s["relative_brauer_group"]["order"] == "3", "group of order 3");
  matches_golden(c, "form_4_0_12_4");
  return "t = " + t.str() + " (inverse class of (3 - sqrt 5)/2), v(t) = 0, v(u) in {1, 2}, Z/3 with profiles {2: 1/3, 3: 2/3} / {2: 2/3, 3: 1/3}";
}

std::string rank_laws(Check& c) {
  int checked = 0;
  for (const auto& e : fs::directory_iterator(CUBEBR_GOLDEN_DIR)) {
    std::string name = e.path().filename().string();
    if (!name.ends_with(".config.json")) continue;
    name = name.substr(0, name.size() - 12);
    JobConfig cfg = config(name);
    json r = run_job(cfg).report;
    for (const auto& s : r["sections"]) {
      if (s["rank"]["value"].is_null()) continue;
      long rank = s["rank"]["value"].get<long>();
      const json& im = s["images"];
      Int a(im["alpha"]["lower"]["order"].get<std::string>());
      FieldConfig fc;
      Int ap = a;
      if (s["field"] == "Q") {
        ap = Int(im["alpha_prime"]["lower"]["order"].get<std::string>());
        const json& E = r["jacobian"]["E"];
        const json& Ep = r["jacobian"]["E'"];
        fc = {E["sqrt_c"]["b"] == "0", Ep["sqrt_c"]["b"] == "0", false};
      } else {
        fc = {true, true, true};
      }
      auto v = validate_rank_data(rank, a, ap, fc);
      c.require(v.consistent, name + " " + s["field"].get<std::string>() + ": " + v.detail);
      for (long d : {-1L, 1L}) {
        auto w = validate_rank_data(rank + d, a, ap, fc);
        c.require(!w.consistent, name + " " + s["field"].get<std::string>() + ": rank " + std::to_string(rank + d) +
                                     " still consistent");
      }
      ++checked;
    }
  }
  c.require(checked >= 10, "too few sections checked");
  return std::to_string(checked) + " sections consistent; every rank +-1 mutation rejected";
}

std::string isogenies(Check& c) {
  std::size_t points = 0;
  int curves = 0;
  for (std::uint64_t q : {7, 13, 19, 31, 61}) {
    auto F = GfField::prime(q);
    int per_field = 0;
    for (long cc = 1; cc < static_cast<long>(q) && per_field < 4; ++cc) {
      GfCurve E{Gf::from_int(F, static_cast<long long>(cc))};
      if ((Gf::from_int(F, -27LL) * E.c).is_zero()) continue;
      auto o = isogeny_oracle(E);
      c.require(o.ok(), "F_" + std::to_string(q) + ", c = " + std::to_string(cc));
      points += o.points;
      ++per_field;
      ++curves;
    }
    c.require(per_field >= 3, "fewer than 3 curves over F_" + std::to_string(q));
  }
  return std::to_string(curves) + " curves, " + std::to_string(points) + " points: lambda, lambda' homomorphisms, lambda' o lambda = [3]";
}

std::string clifford(Check& c) {
  auto s = run_clifford_trials(1, 25, {7, 13, 31, 61});
  c.require(s.trials_run >= 25, "fewer than 25 specializations");
  for (const auto& [n, t] : s.identities) c.require(t.fail == 0 && t.pass == s.trials_run, n);
  c.require(s.rewriter_words >= 100 && s.rewriter_agree == s.rewriter_words, "rewriter disagreement");
  c.require(s.all_pass(), "suite reported failures");
  return std::to_string(s.trials_run) + " specializations x " + std::to_string(s.identities.size()) +
         " identities pass; rewriter agrees on " + std::to_string(s.rewriter_agree) + " words; " +
         std::to_string(s.skipped.size()) + " degenerate draws skipped";
}

std::string numeric(Check& c) {
  int cube_cases = 0;
  const int H = 30;
  for (long m : {-3L, 5L, -15L}) {
    std::set<std::pair<Rat, Rat>> cubes;
    for (int r = 1; r <= H; ++r)
      for (int a = -H; a <= H; ++a)
        for (int b = -H; b <= H; ++b) {
          QuadFieldElem eta(make_rat(a, r), make_rat(b, r), m);
          if (eta.is_zero()) continue;
          QuadFieldElem x = eta * eta * eta;
          cubes.insert({x.a, x.b});
        }
    std::mt19937_64 rng(static_cast<std::uint64_t>(m + 50));
    for (int i = 0; i < 60; ++i) {
      int a = static_cast<int>(rng() % 13) - 6, b = static_cast<int>(rng() % 13) - 6, r = 1 + static_cast<int>(rng() % 3);
      QuadFieldElem x(make_rat(a, r), make_rat(b, r), m);
      if (x.is_zero()) continue;
      if (i % 2 == 0) x = x * x * x;
      auto root = cube_test(x);
      c.require(root.has_value() == (cubes.count({x.a, x.b}) > 0), "cube_test vs brute force at " + x.str());
      if (root) c.require(*root * *root * *root == x, "cube root of " + x.str());
      ++cube_cases;
    }
  }
  std::mt19937_64 rng(3);
  int eis_cases = 0;
  while (eis_cases < 100) {
    EisInt z{static_cast<long>(rng() % 1001) - 500, static_cast<long>(rng() % 1001) - 500};
    if (z.is_zero() || norm(z) > 1000000) continue;
    auto f = factor_eisenstein(z.to_quad());
    c.require(f.value() == z.to_quad(), "Eisenstein round trip");
    ++eis_cases;
  }
  int pairs = 0;
  for (const EisPrime& P : primes_above(Int(13)))
    for (int x = 1; x < 13; ++x)
      for (int y = 1; y < 13; ++y) {
        int e = (cube_residue_character(QuadFieldElem(x), P) + cube_residue_character(QuadFieldElem(y), P)) % 3;
        c.require(cube_residue_character(QuadFieldElem(x * y), P) == e, "character multiplicativity");
        ++pairs;
      }
  return std::to_string(cube_cases) + " cube tests vs brute force, " + std::to_string(eis_cases) +
         " Eisenstein round trips, " + std::to_string(pairs) + " character pairs over F_13";
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<std::string(Check&)>>> criteria = {
      {"ab22 relative Brauer groups", ab22},
      {"ab30 images", ab30},
      {"ab26 cyclic generator and invariant tables", ab26},
      {"c = -432 and c = -27", torsion_cases},
      {"square discriminant form", square_discriminant},
      {"nondiagonal form with discriminant 320", nondiagonal},
      {"rank-law property suite", rank_laws},
      {"isogeny oracle suite", isogenies},
      {"Clifford identity suite", clifford},
      {"numeric-core properties", numeric},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string summary;
    try {
      summary = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    failed += !ok;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first << "]: " << (ok ? "PASS" : "FAIL");
    if (ok) std::cout << " (" << summary << ")";
    for (const auto& f : c.failures) std::cout << "\n    " << f;
    std::cout << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed;
}
