#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubebr/cube.hpp"
#include "cubebr/cubic_form.hpp"
#include "cubebr/elliptic.hpp"
#include "cubebr/local.hpp"

namespace cubebr {

enum class Certainty { Proved, LowerBoundOnly, NeedsRank, Inconsistent };
std::string to_string(Certainty c);

// A point together with the class it produced.
struct Witness {
  std::string curve;              // "E", "E'" or "E(k)"
  std::optional<RatPoint> point;  // on the normalized model of that curve
  std::string label;
  CubeClass cls;
};

struct ImageResult {
  std::string map;  // "alpha", "alpha_prime", or "alpha_k" (alpha over Q(omega))
  long field_m = 1;
  CubeClassGroup lower;
  std::optional<CubeClassGroup> upper;
  std::vector<Witness> witnesses;  // the reduced set of points spanning `lower`
  Certainty status = Certainty::NeedsRank;
  std::string proof;
  Int size() const { return lower.order(); }
};

// ---- descriptors -----------------------------------------------------------

struct SymbolAlgebra {
  QuadFieldElem t, u;  // (t, u)_omega over Q(omega)
  std::string display;
  InvariantTable invariants;
};

struct CyclicAlgebra {
  Rat r, s;  // minimal polynomial X^3 - 3 r X - 2 s
  Rat slot;
  RatPoint witness;
  QuadFieldElem xi;  // s + sqrt(c)
  InvariantTable invariants;
};

struct CupProduct {
  CubeClass u;
  QuadFieldElem t;
  RatPoint witness;
  std::vector<PrimeCertificate> certificate;
  bool complete = false;  // every candidate prime evaluable, so reciprocity applies
  bool nonsplit = false;
  InvariantTable profile, inverse_profile;
};

using AlgebraDescriptor = std::variant<SymbolAlgebra, CyclicAlgebra, CupProduct>;
InvariantTable invariants_of(const AlgebraDescriptor& d);

// ---- alpha images ----------------------------------------------------------

struct CurveData {
  Rat c_input;             // c of Y^2 = X^3 + c as derived from the form
  ModelChange model;       // to the sixth-power-free model
  QuadFieldElem sqrt_c;    // on the normalized model
  TorsionGroup torsion;
  std::vector<RatPoint> points;  // torsion, searched and supplied points on the normalized model
};

// Extra points are given on the sixth-power-free model.
CurveData make_curve_data(const Rat& c, long search_bound, long denom_bound, const std::vector<RatPoint>& extra_points);

// Twisted classes of Q(omega)*/cubes supported on the primes of the
// third-power-free part of 2 sqrt(c), with omega adjoined over Q(omega).
CubeClassGroup alpha_upper_bound_k(const QuadFieldElem& sqrt_c);
CubeClassGroup alpha_upper_bound_q_twisted(const QuadFieldElem& sqrt_c);
CubeClassGroup alpha_upper_bound_q_rational(const Rat& sqrt_c);

// The class group spanned by alpha over the given points, with a reduced
// list of witnesses chosen greedily in point order.
ImageResult alpha_lower(const std::string& map, const CurveData& E, long field_m, const std::string& curve_name);

// alpha(E(k)) over k = Q(omega) from E(Q), E'(Q) and the points (0, +-sqrt c).
ImageResult alpha_lower_k(const CurveData& E, const CurveData& Ep);

// Fill in statuses for a pair of images over Q.
struct RankLaw {
  std::optional<long> rank;
  FieldConfig cfg;
};
void settle_pair(ImageResult& a, ImageResult& ap, const RankLaw& law, RankVerdict& verdict);
void settle_single_k(ImageResult& a, std::optional<long> rank_L, bool sqrt_c_in_k, RankVerdict& verdict);

// ---- generators ------------------------------------------------------------

// (a, xi)_omega for each basis class xi of im(alpha) over Q(omega); classes
// equal to 2 sqrt(c) are displayed as (a, b)_omega.
std::vector<SymbolAlgebra> relative_brauer_diagonal(const Rat& a, const Rat& b, const CubeClassGroup& im_alpha,
                                                    const QuadFieldElem& sqrt_c);

struct CyclicDescent {
  Rat r;
  Rat trace;           // minimal polynomial X^3 - 3 r X - trace
  bool split = false;  // the polynomial has a rational root
};
CyclicDescent cyclic_field_descent(const QuadFieldElem& xi);

std::vector<CyclicAlgebra> relative_brauer_rational(const Rat& a, const ImageResult& im_alpha, const QuadFieldElem& sqrt_c);

CupProduct cup_product(const QuadFieldElem& t, const Witness& u, const std::vector<Int>& extra_primes);

// Order of the subgroup of Br generated by the descriptors, read off from
// the F_3-rank of their invariant vectors.
Int group_order(const std::vector<InvariantTable>& tables);

struct Disjointness {
  bool checked = false;
  bool disjoint = true;
  CubeClassGroup intersection;
  std::string detail;
};
Disjointness disjointness_check(const CubeClassGroup& im_alpha, const CubeClassGroup& im_alpha_prime);

// Rational a reduced modulo cubes to a cube-free integer with sign.
Rat cube_reduce(const Rat& a);

}  // namespace cubebr
