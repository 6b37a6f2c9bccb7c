#include "cubebr/cube.hpp"

#include <algorithm>

namespace cubebr {

std::optional<Rat> cube_test(const Rat& xi) {
  if (xi == 0) throw MathError("cube test of zero");
  return rat_cube_root(xi);
}

std::optional<QuadFieldElem> cube_test(const QuadFieldElem& xi) {
  if (xi.is_zero()) throw MathError("cube test of zero");
  if (xi.m == 1) {
    auto r = rat_cube_root(xi.a);
    if (!r) return std::nullopt;
    return QuadFieldElem(*r);
  }
  // eta^3 = xi forces N(eta) = n with n^3 = N(xi) and t = Tr(eta) a root of
  // t^3 - 3 n t - Tr(xi); eta is then t/2 + y sqrt(m) with 4 m y^2 = t^2 - 4n.
  auto n = rat_cube_root(xi.norm());
  if (!n) return std::nullopt;
  std::vector<QuadFieldElem> roots;
  for (const Rat& t : rational_roots_depressed_cubic(-3 * *n, -xi.trace())) {
    Rat y2 = (t * t - 4 * *n) / (4 * Rat(xi.m));
    auto y = rat_sqrt(y2);
    if (!y) continue;
    for (int s : {1, -1}) {
      QuadFieldElem eta(t / 2, Rat(s) * *y, xi.m);
      if (eta * eta * eta == xi) roots.push_back(eta);
    }
  }
  if (roots.empty()) return std::nullopt;
  return *std::min_element(roots.begin(), roots.end(), lex_less);
}

bool is_cube(const QuadFieldElem& xi) { return cube_test(xi).has_value(); }

EisPrime PrimeKey::eis_prime() const {
  if (kind != Kind::Eisenstein) throw MathError("not an Eisenstein prime key");
  if (x == 0) return EisPrime::ramified();
  if (y == 0) return EisPrime::inert(x);
  return {EisPrime::Kind::Split, x, y, x * x + 3 * y * y};
}

QuadFieldElem PrimeKey::elem() const {
  switch (kind) {
    case Kind::Omega:
      return QuadFieldElem::omega();
    case Kind::Rational:
      return QuadFieldElem(Rat(x));
    case Kind::Eisenstein:
      return eis_prime().elem();
  }
  return QuadFieldElem(1);
}

std::string PrimeKey::label() const {
  switch (kind) {
    case Kind::Omega:
      return "omega";
    case Kind::Rational:
      return x.get_str();
    case Kind::Eisenstein:
      return eis_prime().label();
  }
  return "";
}

bool operator<(const PrimeKey& a, const PrimeKey& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  switch (a.kind) {
    case PrimeKey::Kind::Omega:
      return false;
    case PrimeKey::Kind::Rational:
      return a.x < b.x;
    case PrimeKey::Kind::Eisenstein:
      return a.eis_prime() < b.eis_prime();
  }
  return false;
}

bool operator==(const PrimeKey& a, const PrimeKey& b) {
  return a.kind == b.kind && a.x == b.x && a.y == b.y;
}

namespace {

int mod3(int e) { return ((e % 3) + 3) % 3; }

void normalize(ClassVector& v) {
  for (auto it = v.begin(); it != v.end();) {
    it->second = mod3(it->second);
    it = it->second == 0 ? v.erase(it) : std::next(it);
  }
}

}  // namespace

CubeClass CubeClass::one(long field_m) {
  CubeClass c;
  c.field_m = field_m;
  c.rep = QuadFieldElem(1);
  if (field_m == 1 || field_m == -3) c.factored = ClassVector{};
  return c;
}

CubeClass CubeClass::make(const QuadFieldElem& x, long field_m, unsigned long bound) {
  if (x.is_zero()) throw MathError("zero has no cube class");
  if (x.b != 0 && x.m != field_m) throw MathError("element does not lie in the class field");
  CubeClass c;
  c.field_m = field_m;
  c.rep = x.b == 0 ? x.with_m(field_m) : x;
  if (field_m == 1) {
    ClassVector v;
    auto fn = factor_integer(x.a.get_num(), bound);
    auto fd = factor_integer(x.a.get_den(), bound);
    for (const auto& [p, e] : fn.factors) v[PrimeKey::rational(p)] += e;
    for (const auto& [p, e] : fd.factors) v[PrimeKey::rational(p)] -= e;
    normalize(v);
    c.factored = v;
  } else if (field_m == -3) {
    auto f = factor_q_omega(c.rep, bound);
    ClassVector v;
    if (f.unit_omega) v[PrimeKey::omega()] = f.unit_omega;
    for (const auto& [P, e] : f.exps) v[PrimeKey::eisenstein(P)] += e;
    normalize(v);
    c.factored = v;
  }
  return c;
}

CubeClass CubeClass::from_vector(const ClassVector& v_in, long field_m) {
  ClassVector v = v_in;
  normalize(v);
  CubeClass c;
  c.field_m = field_m;
  QuadFieldElem r(Rat(1), 0, field_m);
  for (const auto& [k, e] : v) r = r * pow(k.elem(), e);
  c.rep = r;
  c.factored = v;
  return c;
}

bool CubeClass::is_trivial() const {
  if (factored) return factored->empty();
  return is_cube(rep);
}

std::string CubeClass::label() const {
  if (!factored) return "[" + rep.str() + "]";
  if (factored->empty()) return "1";
  std::string s;
  for (const auto& [k, e] : *factored) {
    if (!s.empty()) s += "*";
    std::string l = k.label();
    if (k.kind == PrimeKey::Kind::Eisenstein && k.y != 0 && k.x != 0) l = "(" + l + ")";
    s += l;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

CubeClass operator*(const CubeClass& x, const CubeClass& y) {
  if (x.field_m != y.field_m) throw MathError("cube classes over different fields");
  CubeClass c;
  c.field_m = x.field_m;
  c.rep = x.rep * y.rep;
  if (x.factored && y.factored) {
    ClassVector v = *x.factored;
    for (const auto& [k, e] : *y.factored) v[k] += e;
    normalize(v);
    c.factored = v;
    c.rep = CubeClass::from_vector(v, c.field_m).rep;
  }
  return c;
}

CubeClass inverse(const CubeClass& x) {
  if (x.factored) {
    ClassVector v = *x.factored;
    for (auto& [k, e] : v) e = -e;
    return CubeClass::from_vector(v, x.field_m);
  }
  CubeClass c = x;
  c.rep = x.rep.inverse();
  return c;
}

CubeClass pow(const CubeClass& x, int e) {
  e = mod3(e);
  CubeClass r = CubeClass::one(x.field_m);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

bool same_class(const CubeClass& x, const CubeClass& y) {
  if (x.field_m != y.field_m) throw MathError("cube classes over different fields");
  if (x.factored && y.factored) return *x.factored == *y.factored;
  return is_cube(x.rep / y.rep);
}

int f3_rank(std::vector<std::vector<int>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  for (size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (mod3(rows[r][col])) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = mod3(rows[rank][col]) == 1 ? 1 : 2;
    for (auto& v : rows[rank]) v = mod3(v * inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      int f = mod3(rows[r][col]);
      if (!f) continue;
      for (size_t k = 0; k < ncols; ++k) rows[r][k] = mod3(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Row-reduced echelon basis of the span of factored vectors.
std::vector<ClassVector> rref(const std::vector<ClassVector>& vecs) {
  std::vector<PrimeKey> cols;
  for (const auto& v : vecs)
    for (const auto& [k, e] : v) cols.push_back(k);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<int>> rows;
  for (const auto& v : vecs) {
    std::vector<int> row(cols.size(), 0);
    for (size_t i = 0; i < cols.size(); ++i) {
      auto it = v.find(cols[i]);
      if (it != v.end()) row[i] = mod3(it->second);
    }
    rows.push_back(row);
  }
  int rank = 0;
  for (size_t col = 0; col < cols.size() && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col]) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = rows[rank][col] == 1 ? 1 : 2;
    for (auto& v : rows[rank]) v = mod3(v * inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || !rows[r][col]) continue;
      int f = rows[r][col];
      for (size_t k = 0; k < cols.size(); ++k) rows[r][k] = mod3(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  std::vector<ClassVector> out;
  for (int r = 0; r < rank; ++r) {
    ClassVector v;
    for (size_t k = 0; k < cols.size(); ++k)
      if (rows[r][k]) v[cols[k]] = rows[r][k];
    out.push_back(v);
  }
  return out;
}

}  // namespace

CubeClassGroup span(const std::vector<CubeClass>& classes, long field_m) {
  CubeClassGroup g(field_m);
  bool all_factored = true;
  for (const auto& c : classes) {
    if (c.field_m != field_m) throw MathError("mixed field tags in span");
    if (!c.factored) all_factored = false;
  }
  if (all_factored) {
    std::vector<ClassVector> vecs;
    for (const auto& c : classes) vecs.push_back(*c.factored);
    for (const auto& v : rref(vecs)) g.basis_.push_back(CubeClass::from_vector(v, field_m));
    return g;
  }
  for (const auto& c : classes)
    if (!g.contains(c)) g.basis_.push_back(c);
  return g;
}

Int CubeClassGroup::order() const { return int_pow(Int(3), static_cast<unsigned long>(basis_.size())); }

std::optional<std::vector<int>> CubeClassGroup::coordinates(const CubeClass& x) const {
  if (x.field_m != field_m_) throw MathError("membership across different fields");
  size_t k = basis_.size();
  std::vector<int> e(k, 0);
  while (true) {
    CubeClass prod = CubeClass::one(field_m_);
    for (size_t i = 0; i < k; ++i) prod = prod * pow(basis_[i], e[i]);
    if (same_class(prod, x)) return e;
    size_t i = 0;
    while (i < k && e[i] == 2) e[i++] = 0;
    if (i == k) return std::nullopt;
    ++e[i];
  }
}

bool CubeClassGroup::contains(const CubeClass& x) const { return coordinates(x).has_value(); }

std::vector<CubeClass> CubeClassGroup::elements() const {
  std::vector<CubeClass> out{CubeClass::one(field_m_)};
  for (const auto& b : basis_) {
    std::vector<CubeClass> next;
    for (const auto& c : out)
      for (int e = 0; e < 3; ++e) next.push_back(c * pow(b, e));
    out = std::move(next);
  }
  return out;
}

std::string CubeClassGroup::label() const {
  if (basis_.empty()) return "{1}";
  std::string s = "<";
  for (size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + basis_[i].label();
  return s + ">";
}

bool member(const CubeClassGroup& g, const CubeClass& x) { return g.contains(x); }

bool subgroup_of(const CubeClassGroup& h, const CubeClassGroup& g) {
  for (const auto& b : h.basis())
    if (!g.contains(b)) return false;
  return true;
}

CubeClassGroup intersection(const CubeClassGroup& a, const CubeClassGroup& b) {
  std::vector<CubeClass> common;
  for (const auto& x : a.elements())
    if (b.contains(x)) common.push_back(x);
  return span(common, a.field_m());
}

}  // namespace cubebr
