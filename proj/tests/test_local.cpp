#include <set>

#include "cubebr/local.hpp"
#include "doctest.h"

using namespace cubebr;

namespace {

QuadFieldElem eis(long x, long y) { return QuadFieldElem(x, y, -3); }

int at(const std::map<EisPrime, int>& m, const EisPrime& P) {
  auto it = m.find(P);
  return it == m.end() ? 0 : it->second;
}

const EisPrime P13{EisPrime::Kind::Split, 1, 2, 13};
const EisPrime Q13{EisPrime::Kind::Split, 1, -2, 13};

}  // namespace

TEST_CASE("symbol invariants over Q(omega) for ab = 26, a = 3") {
  auto p = eis(1, 2), q = eis(1, -2);
  auto a = symbol_invariants(3, 2 * p * p);
  CHECK(at(a, P13) == 2);
  CHECK(at(a, EisPrime::ramified()) == 1);
  CHECK(at(a, Q13) == 0);
  CHECK(at(a, EisPrime::inert(2)) == 0);
  auto b = symbol_invariants(3, 2 * q * q);
  CHECK(at(b, Q13) == 1);
  CHECK(at(b, EisPrime::ramified()) == 2);
  CHECK(at(b, P13) == 0);
  auto c = symbol_invariants(3, p * q * q);
  CHECK(at(c, P13) == 1);
  CHECK(at(c, Q13) == 1);
  CHECK(at(c, EisPrime::ramified()) == 1);
  auto dq = descend_to_q(c);
  CHECK(dq.at(13) == 1);
  CHECK(dq.at(3) == 2);
  CHECK_THROWS_AS(descend_to_q(a), MathError);
}

TEST_CASE("split symbols for ab = 22, a = 2") {
  for (long u : {2L, 11L}) {
    auto inv = symbol_invariants(2, u);
    CHECK(nonzero(to_table(inv)).empty());
  }
}

TEST_CASE("reciprocity and slot-change invariance") {
  for (auto [t, u] : {std::pair{eis(3, 0), eis(5, 4)}, {eis(7, 0), eis(2, 1)}, {eis(11, 3), eis(-4, 1)}}) {
    auto inv = symbol_invariants(t, u);
    CHECK(invariant_sum(to_table(inv)) == 0);
    auto inv2 = symbol_invariants(u, t);
    for (auto& [P, e] : inv) CHECK((e + at(inv2, P)) % 3 == 0);
  }
  // (a, 2 sqrt c) and (a, b) agree: c = -27 (ab/2)^2, a = 7, b = 2/7
  QuadFieldElem sc(0, 3, -3);
  auto x = symbol_invariants(7, 2 * sc), y = symbol_invariants(7, QuadFieldElem(Rat(2, 7)));
  CHECK(nonzero(to_table(x)).size() == nonzero(to_table(y)).size());
  for (auto& [P, e] : x) CHECK(e == at(y, P));
}

TEST_CASE("galois ring square roots") {
  for (long p : {2L, 5L, 7L, 11L, 13L}) {
    GaloisRing2 R(p, 40);
    for (long m : {-3L, 5L, -15L, 13L, -7L}) {
      if (p == 2 && ((m % 4) + 4) % 4 != 1) continue;
      if (p != 2 && m % p == 0) continue;
      auto s = R.sqrt_of(m, 0);
      auto s2 = R.mul(s, s);
      CHECK(R.is_zero(R.sub(s2, R.from_int(m))));
      auto i = R.inverse(s);
      CHECK(R.is_zero(R.sub(R.mul(s, i), R.from_int(1))));
    }
  }
  CHECK_THROWS_AS(GaloisRing2(3, 40), MathError);
  CHECK_THROWS_AS(GaloisRing2(2, 40).sqrt_of(3, 0), MathError);
}

TEST_CASE("unramified completions agree with the Eisenstein engine") {
  // B (x) Q(omega) = (a, xi)_omega = -(xi, a)_omega
  struct Case {
    long a;
    QuadFieldElem xi;
  };
  for (auto cs : {Case{3, eis(234, 39)}, Case{2, eis(234, 39)}, Case{5, eis(684, 204)}, Case{7, eis(36, 12)},
                  Case{13, eis(468, 1092)}, Case{11, eis(1988, 1092)}}) {
    auto q = descend_to_q(symbol_invariants(cs.a, cs.xi));
    std::set<Int> primes;
    for (auto& [p, e] : q)
      if (p != 3) primes.insert(p);
    for (const Int& p : cup_product_candidate_primes(cs.xi, QuadFieldElem(Rat(cs.a)), {})) primes.insert(p);
    for (const Int& p : primes) {
      auto cert = cup_product_local(cs.xi, QuadFieldElem(Rat(cs.a)), p);
      REQUIRE(cert.thirds.has_value());
      int expect = q.count(p) ? q.at(p) : 0;
      CAPTURE(p.get_str());
      CAPTURE(cs.a);
      CHECK((*cert.thirds + expect) % 3 == 0);
    }
  }
}

TEST_CASE("ramification certificate for the discriminant 320 form") {
  QuadFieldElem t(Rat(3, 2), Rat(-1, 2), 5), u(9, 3, -15);
  auto primes = cup_product_candidate_primes(t, u, {});
  CHECK(primes == std::vector<Int>{2, 5});
  auto c2 = cup_product_local(t, u, 2);
  CHECK(c2.status == "unramified");
  REQUIRE(c2.embeddings.size() == 4);
  std::set<int> vu;
  for (auto& e : c2.embeddings) {
    CHECK(e.v_t == 0);
    REQUIRE(e.t_residue_is_cube.has_value());
    CHECK_FALSE(*e.t_residue_is_cube);
    vu.insert(e.v_u);
  }
  CHECK(vu == std::set<int>{1, 2});
  REQUIRE(c2.thirds.has_value());
  CHECK(*c2.thirds != 0);
  auto c5 = cup_product_local(t, u, 5);
  CHECK(c5.status == "ramified-units");
  CHECK(c5.thirds == 0);
  auto inv = cup_product_local(t.inverse(), u, 2);
  CHECK((*inv.thirds + *c2.thirds) % 3 == 0);
}
