#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubebr/eisenstein.hpp"
#include "cubebr/finite_field.hpp"
#include "cubebr/quad.hpp"

namespace cubebr {

// Local invariants are stored in thirds: e in {0,1,2} stands for e/3 in Q/Z.
struct InvariantEntry {
  std::string prime;
  int thirds = 0;
};
using InvariantTable = std::vector<InvariantEntry>;

Rat thirds_to_rat(int e);
// Nonzero entries only, in the given order.
InvariantTable nonzero(const InvariantTable& t);
int invariant_sum(const InvariantTable& t);

// ---- symbols over Q(omega) ------------------------------------------------

// Tame invariant of (t, u)_omega at a prime P of Z[omega] not above 3.
int tame_invariant(const QuadFieldElem& t, const QuadFieldElem& u, const EisPrime& P);

// All local invariants of (t, u)_omega over Q(omega): the tame ones at the
// primes in the support of t and u, and sqrt(-3) completed by reciprocity.
// Keys are sorted (sqrt(-3) included even when zero).
std::map<EisPrime, int> symbol_invariants(const QuadFieldElem& t, const QuadFieldElem& u);
InvariantTable to_table(const std::map<EisPrime, int>& inv);

// A degree-3 algebra B over Q with B (x) Q(omega) = (t, u)_omega: invariants
// at rational primes.  Throws if the two primes over a split p disagree.
std::map<Int, int> descend_to_q(const std::map<EisPrime, int>& inv);
InvariantTable to_table(const std::map<Int, int>& inv);

// ---- unramified completions of Q(sqrt m1, sqrt -3) ------------------------

// Z_p[x]/(x^2 + g1 x + g0) modulo p^N: the ring of integers of the unramified
// quadratic extension of Q_p, truncated.
class GaloisRing2 {
 public:
  struct Elem {
    Int c0 = 0, c1 = 0;
  };
  GaloisRing2(const Int& p, int precision);

  const Int& p() const { return p_; }
  const Int& modulus() const { return pN_; }
  int precision() const { return N_; }
  Int g0() const { return g0_; }
  Int g1() const { return g1_; }
  GfFieldPtr residue_field() const { return residue_; }

  Elem from_int(const Int& n) const;
  Elem gen() const { return {0, 1}; }
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inverse(const Elem& x) const;  // x must be a unit
  bool is_zero(const Elem& x) const;
  int valuation(const Elem& x) const;  // N when zero to precision
  Gf reduce(const Elem& x) const;      // residue of an integral element
  // The p-adic square root of m (or (1 + sqrt m)/2 when p = 2, m = 1 mod 4)
  // starting from the residue root with index choice 0 or 1.
  Elem sqrt_of(long m, int choice) const;

 private:
  Int p_, pN_;
  int N_;
  Int g0_, g1_;
  GfFieldPtr residue_;
  Elem reduce_coeffs(Elem x) const;
};

// One embedding of L = Q(sqrt m1, sqrt -3) into the unramified quadratic
// extension of Q_p, recorded by the images of sqrt m for each tag used.
struct LocalEmbedding {
  std::string label;
  std::map<long, GaloisRing2::Elem> sqrt_image;
};

struct LocalValue {
  int v = 0;
  Gf residue;  // residue of x / p^v
};

LocalValue local_value(const GaloisRing2& R, const LocalEmbedding& emb, const QuadFieldElem& x);

// All embeddings of L with m1 the tag of t and m2 = sqf(-3 m1) the tag of u.
std::vector<LocalEmbedding> local_embeddings(const GaloisRing2& R, long m1, long m2);

// Per-embedding record of the tame ramification data.
struct EmbeddingCertificate {
  std::string embedding;
  int v_t = 0;
  int v_u = 0;
  std::optional<bool> t_residue_is_cube;  // when v_t = 0
  std::string tame_residue;
  int character = 0;
  int thirds_local = 0;  // invariant over the unramified quadratic extension
};

struct PrimeCertificate {
  Int p;
  std::string status;  // "unramified", "ramified-units", "not-evaluable", "reciprocity"
  std::vector<EmbeddingCertificate> embeddings;
  std::optional<int> thirds;  // invariant of the algebra over Q at p
  std::string detail;
};

// Local invariant at p != 3 of the algebra B over Q with B (x) L = (t, u)_omega,
// t in Q(sqrt m1), u in Q(sqrt m2), m2 = sqf(-3 m1).
PrimeCertificate cup_product_local(const QuadFieldElem& t, const QuadFieldElem& u, const Int& p, int precision = 100);

// Primes other than 3 where (t, u) may be nonsplit.
std::vector<Int> cup_product_candidate_primes(const QuadFieldElem& t, const QuadFieldElem& u,
                                              const std::vector<Int>& extra);

bool is_p_unit(const QuadFieldElem& x, const Int& p);

}  // namespace cubebr
