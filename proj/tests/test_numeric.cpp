#include <map>
#include <random>
#include <set>

#include "cubebr/cube.hpp"
#include "cubebr/eisenstein.hpp"
#include "cubebr/factor.hpp"
#include "cubebr/finite_field.hpp"
#include "doctest.h"

using namespace cubebr;

namespace {
QuadFieldElem q(const char* a, const char* b, long m) { return QuadFieldElem(parse_rat(a), parse_rat(b), m); }
}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-7")) == "-7");
  CHECK(to_string(parse_rat("4/-2")) == "-2");
  CHECK_THROWS_AS(parse_rat("1/0"), MathError);
  CHECK_THROWS_AS(parse_rat("x"), MathError);
}

TEST_CASE("factor_integer examples") {
  auto f = factor_integer(Int(728));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::make_pair(Int(2), 3));
  CHECK(f.factors[1] == std::make_pair(Int(7), 1));
  CHECK(f.factors[2] == std::make_pair(Int(13), 1));
  auto one = factor_integer(Int(1));
  CHECK(one.factors.empty());
  CHECK(one.sign == 1);
  auto g = factor_integer(Int(88209));
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0] == std::make_pair(Int(3), 6));
  CHECK(g.factors[1] == std::make_pair(Int(11), 2));
  CHECK_THROWS_AS(factor_integer(Int(0)), MathError);
  CHECK_THROWS_AS(factor_integer(Int("1000000000000000000000000000057"), 100), FactorizationLimit);
}

TEST_CASE("factor_integer round trip on random integers") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    long long n = static_cast<long long>(rng() % 2000000) - 1000000;
    if (n == 0) continue;
    auto f = factor_integer(Int(static_cast<long>(n)));
    CHECK(f.value() == Int(static_cast<long>(n)));
    for (size_t k = 1; k < f.factors.size(); ++k) CHECK(f.factors[k - 1].first < f.factors[k].first);
    for (const auto& [p, e] : f.factors) CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
  }
}

TEST_CASE("sixth-power-free normalization") {
  auto s = sixth_power_free(Rat(-8640));
  CHECK(s.c == -135);
  CHECK(Rat(-8640) * rat_pow(s.u, 6) == Rat(-135));
  auto t = sixth_power_free(parse_rat("-27/64"));
  CHECK(t.c == -27);
  auto d = sixth_power_free(Rat(729 * 121));
  CHECK(d.c == 121);
}

TEST_CASE("rational roots of depressed cubics") {
  CHECK(rational_roots_depressed_cubic(Rat(-7), Rat(6)) == std::vector<Rat>{Rat(-3), Rat(1), Rat(2)});
  CHECK(rational_roots_depressed_cubic(Rat(-18), Rat(-18)).empty());
  CHECK(rational_roots_depressed_cubic(Rat(0), parse_rat("-1/8")) == std::vector<Rat>{parse_rat("1/2")});
  CHECK(rational_roots_depressed_cubic(Rat(-3), Rat(2)) == std::vector<Rat>{Rat(-2), Rat(1)});
}

TEST_CASE("quadratic field arithmetic") {
  QuadFieldElem x = q("2", "1", 5);
  CHECK(x.norm() == -1);
  CHECK(x * x.inverse() == QuadFieldElem(1));
  CHECK((QuadFieldElem::omega() * QuadFieldElem::omega() * QuadFieldElem::omega()) == QuadFieldElem(1));
  CHECK(QuadFieldElem::eta() == QuadFieldElem(2) * QuadFieldElem::omega() + QuadFieldElem(1));
  CHECK_THROWS_AS(q("1", "1", 4), MathError);
  CHECK_THROWS_AS(q("1", "1", 5) * q("1", "1", 3), MathError);
}

TEST_CASE("Eisenstein factorization examples") {
  auto f13 = factor_eisenstein(QuadFieldElem(Rat(13), 0, -3));
  REQUIRE(f13.factors.size() == 2);
  CHECK(f13.factors[0].first.elem() == q("1", "2", -3));
  CHECK(f13.factors[1].first.elem() == q("1", "-2", -3));
  CHECK(f13.unit_sign == 1);
  CHECK(f13.unit_omega == 0);
  auto f7 = factor_eisenstein(QuadFieldElem(Rat(7), 0, -3));
  REQUIRE(f7.factors.size() == 2);
  CHECK(f7.factors[0].first.elem() == q("2", "1", -3));
  CHECK(f7.factors[1].first.elem() == q("2", "-1", -3));
  auto f3 = factor_eisenstein(QuadFieldElem(Rat(3), 0, -3));
  REQUIRE(f3.factors.size() == 1);
  CHECK(f3.factors[0].first.kind == EisPrime::Kind::Ramified);
  CHECK(f3.factors[0].second == 2);
  CHECK(f3.unit_sign == -1);
  CHECK(f3.unit_omega == 0);
  CHECK_THROWS_AS(factor_eisenstein(q("1/2", "0", -3)), MathError);
  CHECK(valuation(QuadFieldElem(13), split_prime_above(Int(13))) == 1);
}

TEST_CASE("Eisenstein factorization round trip on random integers of Z[omega]") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 150) {
    long u = static_cast<long>(rng() % 1201) - 600, v = static_cast<long>(rng() % 1201) - 600;
    EisInt z{u, v};
    if (z.is_zero() || norm(z) > 1000000) continue;
    ++done;
    auto f = factor_eisenstein(z.to_quad());
    CHECK(f.value() == z.to_quad());
    for (const auto& [P, e] : f.factors) {
      Int n = P.norm();
      bool ok = mpz_probab_prime_p(n.get_mpz_t(), 30) > 0 ||
                (P.kind == EisPrime::Kind::Inert && n == P.p * P.p && mod_floor(P.p, 3) == 2);
      CHECK(ok);
      if (P.kind == EisPrime::Kind::Split) CHECK(P.x > 0);
    }
  }
}

TEST_CASE("cube_test examples") {
  auto r = cube_test(q("2", "1", 5));
  REQUIRE(r);
  CHECK(*r == q("1/2", "1/2", 5));
  auto e = cube_test(QuadFieldElem(8));
  REQUIRE(e);
  CHECK(*e == QuadFieldElem(2));
  CHECK_FALSE(cube_test(q("9", "3", -15)));
  // three roots of 1 in Q(omega): 1, omega, omega^2; smallest is omega^2 = (-1/2, -1/2)
  auto w = cube_test(QuadFieldElem(Rat(1), 0, -3));
  REQUIRE(w);
  CHECK(*w == q("-1/2", "-1/2", -3));
  CHECK_THROWS_AS(cube_test(QuadFieldElem(0)), MathError);
}

TEST_CASE("cube_test agrees with brute-force search on small heights") {
  const int H = 30;
  for (long m : {-3L, 5L, -15L, 2L}) {
    std::map<std::pair<Rat, Rat>, QuadFieldElem> cubes;
    for (int r = 1; r <= H; ++r)
      for (int a = -H; a <= H; ++a)
        for (int b = -H; b <= H; ++b) {
          QuadFieldElem eta(make_rat(a, r), make_rat(b, r), m);
          if (eta.is_zero() || (eta.a.get_den() != r && eta.b.get_den() != r)) continue;
          QuadFieldElem c = eta * eta * eta;
          cubes.emplace(std::make_pair(c.a, c.b), eta);
        }
    std::mt19937_64 rng(static_cast<unsigned long>(m + 100));
    int agreed = 0;
    for (int i = 0; i < 60; ++i) {
      QuadFieldElem xi;
      if (i % 2 == 0) {
        int a = static_cast<int>(rng() % 7) - 3, b = static_cast<int>(rng() % 7) - 3, r = 1 + static_cast<int>(rng() % 3);
        QuadFieldElem eta(make_rat(a, r), make_rat(b, r), m);
        if (eta.is_zero()) continue;
        xi = eta * eta * eta;
      } else {
        int a = static_cast<int>(rng() % 41) - 20, b = static_cast<int>(rng() % 41) - 20, r = 1 + static_cast<int>(rng() % 5);
        xi = QuadFieldElem(make_rat(a, r), make_rat(b, r), m);
        if (xi.is_zero()) continue;
      }
      bool brute = cubes.count({xi.a, xi.b}) > 0;
      auto root = cube_test(xi);
      CHECK(brute == root.has_value());
      if (root) CHECK(*root * *root * *root == xi);
      ++agreed;
    }
    CHECK(agreed > 40);
  }
}

TEST_CASE("cube residue character at 1+2sqrt(-3)") {
  EisPrime P = split_prime_above(Int(13));
  CHECK(P.elem() == q("1", "2", -3));
  auto F = residue_field(P);
  CHECK(omega_mod(P, F) == Gf::from_int(F, 9LL));
  CHECK(cube_residue_character(QuadFieldElem(3), P) == 2);
  CHECK(cube_residue_character(QuadFieldElem(5), P) == 0);
  CHECK(cube_residue_character(QuadFieldElem(1), P) == 0);
  CHECK_THROWS_AS(cube_residue_character(QuadFieldElem(13), P), MathError);
  CHECK_THROWS_AS(cube_residue_character(QuadFieldElem(2), EisPrime::ramified()), MathError);
  // cubes mod 13 by enumeration
  std::set<int> cubes;
  for (int x = 1; x < 13; ++x) cubes.insert(x * x * x % 13);
  CHECK(cubes == std::set<int>{1, 5, 8, 12});
  for (int x = 1; x < 13; ++x) CHECK((cube_residue_character(QuadFieldElem(x), P) == 0) == (cubes.count(x) > 0));
}

TEST_CASE("cube residue character is multiplicative over F_13 and F_7") {
  for (int p : {13, 7}) {
    for (const EisPrime& P : primes_above(Int(p))) {
      for (int x = 1; x < p; ++x)
        for (int y = 1; y < p; ++y) {
          int ex = cube_residue_character(QuadFieldElem(x), P);
          int ey = cube_residue_character(QuadFieldElem(y), P);
          int exy = cube_residue_character(QuadFieldElem(x * y), P);
          CHECK(exy == (ex + ey) % 3);
        }
    }
  }
}

TEST_CASE("cube residue character at an inert prime") {
  EisPrime two = EisPrime::inert(Int(2));
  CHECK(cube_residue_character(QuadFieldElem(5), two) == 0);
  CHECK(cube_residue_character(QuadFieldElem::omega(), two) == 1);
}

TEST_CASE("cube class spans") {
  auto two = CubeClass::make(QuadFieldElem(2), 1);
  auto tt = CubeClass::make(QuadFieldElem(22), 1);
  auto g = span({two, tt}, 1);
  CHECK(g.order() == 9);
  REQUIRE(g.dim() == 2);
  CHECK(g.basis()[0].rep == QuadFieldElem(2));
  CHECK(g.basis()[1].rep == QuadFieldElem(11));
  CHECK(span({CubeClass::make(QuadFieldElem(1), 1)}, 1).order() == 1);
  auto h = span({CubeClass::make(QuadFieldElem(2), 1), CubeClass::make(QuadFieldElem(3), 1),
                 CubeClass::make(QuadFieldElem(5), 1)},
                1);
  CHECK(member(h, CubeClass::make(QuadFieldElem(30), 1)));
  CHECK(member(h, CubeClass::make(QuadFieldElem(Rat(30 * 27)), 1)));
  CHECK_FALSE(member(h, CubeClass::make(QuadFieldElem(7), 1)));
  CHECK_THROWS_AS(span({two, CubeClass::make(QuadFieldElem(Rat(2), 0, -3), -3)}, 1), MathError);
}

TEST_CASE("membership is insensitive to cube factors in unfactored fields") {
  auto u = CubeClass::make(q("9", "3", -15), -15);
  auto g = span({u}, -15);
  CHECK(g.dim() == 1);
  QuadFieldElem c = q("2", "-1", -15);
  CHECK(member(g, CubeClass::make(q("9", "3", -15) * c * c * c, -15)));
  CHECK(member(g, CubeClass::make(q("9", "-3", -15), -15)));  // (u)(conj u) = 6^3
  CHECK_FALSE(member(g, CubeClass::make(q("2", "0", -15), -15)));
}

TEST_CASE("Q(omega) class factoring") {
  auto c = CubeClass::make(q("234", "39", -3), -3);  // 234 + sqrt(-27*13^2)
  REQUIRE(c.factored);
  EisPrime P = split_prime_above(Int(13));
  EisPrime Q = P;
  Q.y = -Q.y;
  ClassVector want{{PrimeKey::eisenstein(P), 1}, {PrimeKey::eisenstein(Q), 2}};
  CHECK(*c.factored == want);
  auto w = CubeClass::make(q("684", "204", -3), -3);
  ClassVector om{{PrimeKey::omega(), 2}};
  CHECK(*w.factored == om);
}
