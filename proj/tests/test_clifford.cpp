#include <random>

#include "cubebr/clifford.hpp"
#include "doctest.h"

using namespace cubebr;

namespace {

Gf g(const GfFieldPtr& F, long long n) { return Gf::from_int(F, n); }

}  // namespace

TEST_CASE("symbol algebra relations over F_13") {
  auto F = GfField::prime(13);
  SymbolAlgebraGf A(g(F, 2), g(F, 7), g(F, 9));
  CHECK(A.equal(A.mul(A.i(), A.j()), A.scale(g(F, 9), A.mul(A.j(), A.i()))));
  CHECK(A.equal(A.pow(A.i(), 3), A.scalar(2)));
  CHECK(A.equal(A.pow(A.j(), 3), A.scalar(7)));
  std::mt19937_64 rng(5);
  int inverted = 0;
  for (int k = 0; k < 50; ++k) {
    SymbolAlgebraGf::Elem x;
    for (auto& c : x) c = g(F, static_cast<long long>(rng() % 13));
    SymbolAlgebraGf::Elem y, z;
    for (auto& c : y) c = g(F, static_cast<long long>(rng() % 13));
    for (auto& c : z) c = g(F, static_cast<long long>(rng() % 13));
    CHECK(A.equal(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z))));
    if (auto xi = A.inverse(x)) {
      ++inverted;
      CHECK(A.equal(A.mul(x, *xi), A.one()));
      CHECK(A.equal(A.mul(*xi, x), A.one()));
    }
  }
  CHECK(inverted > 0);
  CHECK_FALSE(A.inverse(A.zero()).has_value());
}

TEST_CASE("zero divisor has no inverse in a split algebra") {
  auto F = GfField::prime(7);
  // u = 1 is a cube, so 1 - j is a zero divisor: (1 - j)(1 + j + j^2) = 0
  SymbolAlgebraGf A(g(F, 3), g(F, 1), g(F, 2));
  auto e = A.sub(A.one(), A.j());
  CHECK_FALSE(A.inverse(e).has_value());
}

TEST_CASE("specialization over F_13 with a = 2, b = 3") {
  auto F = GfField::prime(13);
  auto S = specialize(g(F, 2), g(F, 3), g(F, 2), g(F, 5), g(F, 9));
  CHECK(S.c == g(F, 4));
  CHECK(S.sqrt_c == g(F, 2));
  const auto& A = S.alg;
  CHECK(A.equal(A.pow(S.z, 3), A.scalar(7)));
  CHECK(A.equal(A.pow(S.zeta, 3), A.scalar(3)));
  CHECK(A.equal(A.mul(A.pow(S.z, 3), A.pow(S.zeta, 3)), A.scalar(8)));
  CHECK(A.equal(A.pow(S.y, 3), A.scalar(3)));
  for (const auto& r : verify_identities(S, g(F, 4))) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.status == "pass");
  }
}

TEST_CASE("degenerate specializations are rejected") {
  auto F = GfField::prime(13);
  // r0 = 0: s0^2 = c = 4
  CHECK_THROWS_AS(specialize(g(F, 2), g(F, 3), g(F, 0), g(F, 2), g(F, 9)), MathError);
  CHECK_THROWS_AS(specialize(g(F, 2), g(F, 3), g(F, 2), g(F, 6), g(F, 9)), MathError);
  CHECK_THROWS_AS(specialize(g(F, 2), g(F, 3), g(F, 2), g(F, 5), g(F, 1)), MathError);
}

TEST_CASE("specialization over F_7") {
  auto F = GfField::prime(7);
  // a = b = 1: c = -27/4 = 2 mod 7
  auto roots = primitive_cube_roots_of_unity(F);
  for (const auto& w : roots) {
    auto S = specialize(g(F, 1), g(F, 1), g(F, 3), g(F, 1), w);
    for (const auto& r : verify_identities(S, g(F, 3))) {
      INFO(r.name);
      CHECK(r.status == "pass");
    }
  }
}

TEST_CASE("the uncorrected minimal polynomial fails") {
  auto F = GfField::prime(13);
  auto S = specialize(g(F, 2), g(F, 3), g(F, 2), g(F, 5), g(F, 9));
  const auto& A = S.alg;
  auto u = A.add(S.z, S.zeta);
  auto lhs = A.sub(A.sub(A.pow(u, 3), A.scale(S.r0, u)), A.scalar(g(F, 2) * S.s0));
  CHECK_FALSE(A.equal(lhs, A.zero()));
}

TEST_CASE("word rewriter") {
  auto F = GfField::prime(13);
  WordRewriter rw(g(F, 2), g(F, 3));
  auto n = rw.normal_form("xxx");
  REQUIRE(n.size() == 1);
  CHECK(n.at("") == g(F, 2));
  n = rw.normal_form("xxy");
  CHECK(n.size() == 2);
  CHECK(n.at("xyx") == g(F, -1));
  CHECK(n.at("yxx") == g(F, -1));
  for (const auto& [w, c] : rw.normal_form("xxyxyyxxy")) {
    CHECK(w.find("xxx") == std::string::npos);
    CHECK(w.find("xxy") == std::string::npos);
    CHECK(w.find("xyy") == std::string::npos);
    CHECK(w.find("yyy") == std::string::npos);
  }
  auto S = specialize(g(F, 2), g(F, 3), g(F, 2), g(F, 5), g(F, 9));
  for (const char* w : {"xxyxyy", "yyxxyx", "xyxyxy", "yyyyxx"})
    CHECK(S.alg.equal(evaluate_word(S, w), evaluate_poly(S, rw.normal_form(w))));
}

TEST_CASE("randomized trials") {
  auto sum = run_clifford_trials(7, 25, {7, 13, 31, 61});
  CHECK(sum.trials_run == 25);
  CHECK(sum.failures.empty());
  CHECK(sum.rewriter_words == 2500);
  CHECK(sum.rewriter_agree == 2500);
  CHECK(sum.all_pass());
  for (const auto& [name, t] : sum.identities) {
    INFO(name);
    CHECK(t.fail == 0);
    CHECK(t.pass + t.not_evaluable == 25);
  }
  auto again = run_clifford_trials(7, 25, {7, 13, 31, 61});
  CHECK(again.skipped == sum.skipped);
  CHECK_THROWS_AS(run_clifford_trials(1, 1, {11}), MathError);
}
