#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubebr/eisenstein.hpp"
#include "cubebr/quad.hpp"

namespace cubebr {

// Cube root in the same field, or none.  Among several roots the one with
// lexicographically smallest (a, b) is returned.
std::optional<QuadFieldElem> cube_test(const QuadFieldElem& xi);
std::optional<Rat> cube_test(const Rat& xi);
bool is_cube(const QuadFieldElem& xi);

// Key of a coordinate in a factored cube class.
struct PrimeKey {
  enum class Kind { Omega = 0, Rational = 1, Eisenstein = 2 };
  Kind kind = Kind::Rational;
  Int x = 0;  // rational prime, or x of x + y*sqrt(-3)
  Int y = 0;

  static PrimeKey omega() { return {Kind::Omega, 0, 0}; }
  static PrimeKey rational(const Int& p) { return {Kind::Rational, p, 0}; }
  static PrimeKey eisenstein(const EisPrime& P) { return {Kind::Eisenstein, P.x, P.y}; }
  EisPrime eis_prime() const;
  QuadFieldElem elem() const;
  std::string label() const;
};

bool operator<(const PrimeKey& a, const PrimeKey& b);
bool operator==(const PrimeKey& a, const PrimeKey& b);

using ClassVector = std::map<PrimeKey, int>;  // exponents in {1, 2}

// Element of K*/K*^3 with K = Q (field_m == 1) or Q(sqrt field_m).
struct CubeClass {
  long field_m = 1;
  QuadFieldElem rep = QuadFieldElem(1);
  std::optional<ClassVector> factored;  // present over Q and Q(omega)

  static CubeClass make(const QuadFieldElem& x, long field_m, unsigned long bound = kDefaultTrialBound);
  static CubeClass from_vector(const ClassVector& v, long field_m);
  static CubeClass one(long field_m);

  bool is_trivial() const;
  std::string label() const;
};

CubeClass operator*(const CubeClass& x, const CubeClass& y);
CubeClass inverse(const CubeClass& x);
CubeClass pow(const CubeClass& x, int e);
bool same_class(const CubeClass& x, const CubeClass& y);

// Finite subgroup of K*/K*^3 given by a reduced basis.
class CubeClassGroup {
 public:
  CubeClassGroup() = default;
  explicit CubeClassGroup(long field_m) : field_m_(field_m) {}

  long field_m() const { return field_m_; }
  const std::vector<CubeClass>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  Int order() const;
  bool contains(const CubeClass& x) const;
  // Exponents e with x = prod basis[i]^e[i], if x is in the group.
  std::optional<std::vector<int>> coordinates(const CubeClass& x) const;
  std::vector<CubeClass> elements() const;
  std::string label() const;

  friend CubeClassGroup span(const std::vector<CubeClass>& classes, long field_m);

 private:
  long field_m_ = 1;
  std::vector<CubeClass> basis_;
};

CubeClassGroup span(const std::vector<CubeClass>& classes, long field_m);
bool member(const CubeClassGroup& g, const CubeClass& x);
bool subgroup_of(const CubeClassGroup& h, const CubeClassGroup& g);
CubeClassGroup intersection(const CubeClassGroup& a, const CubeClassGroup& b);

// Rank over F_3 of a list of vectors (coordinates in {0,1,2}).
int f3_rank(std::vector<std::vector<int>> rows);

}  // namespace cubebr
