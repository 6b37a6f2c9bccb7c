#include "cubebr/finite_field.hpp"

namespace cubebr {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1u << 22;

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void check_same(const Gf& x, const Gf& y) {
  if (x.F != y.F && (x.F->p() != y.F->p() || x.F->modulus() != y.F->modulus()))
    throw MathError("finite-field elements from different fields");
}

}  // namespace

std::shared_ptr<const GfField> GfField::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime_u64(p)) throw MathError("characteristic must be a prime below 2^31");
  auto f = std::make_shared<GfField>();
  f->p_ = p;
  f->n_ = 1;
  f->q_ = p;
  f->mod_ = {0};
  return f;
}

std::shared_ptr<const GfField> GfField::extension(std::uint64_t p, std::vector<std::uint64_t> low) {
  auto base = prime(p);
  int n = static_cast<int>(low.size());
  if (n < 1 || n > 4) throw MathError("extension degree must be 1..4");
  for (auto& v : low) v %= p;
  auto f = std::make_shared<GfField>();
  f->p_ = p;
  f->n_ = n;
  f->mod_ = low;
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  f->q_ = q;
  if (n >= 2 && n <= 3) {
    // irreducible iff no root in F_p
    for (std::uint64_t r = 0; r < p; ++r) {
      std::uint64_t acc = 1;  // leading coefficient
      for (int i = n - 1; i >= 0; --i) acc = (acc * r + low[i]) % p;
      if (acc == 0) throw MathError("extension modulus is reducible");
    }
  }
  return f;
}

std::string GfField::describe() const {
  if (n_ == 1) return "F_" + std::to_string(p_);
  std::string s = "F_" + std::to_string(p_) + "[x]/(x^" + std::to_string(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    if (mod_[i] == 0) continue;
    s += " + " + std::to_string(mod_[i]);
    if (i >= 1) s += "*x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s + ")";
}

Gf Gf::from_int(const GfFieldPtr& F, long long n) {
  Gf x;
  x.F = F;
  long long p = static_cast<long long>(F->p());
  long long r = n % p;
  if (r < 0) r += p;
  x.c[0] = static_cast<std::uint64_t>(r);
  return x;
}

Gf Gf::from_int(const GfFieldPtr& F, const Int& n) {
  Int r = mod_floor(n, Int(static_cast<unsigned long>(F->p())));
  return from_int(F, static_cast<long long>(r.get_si()));
}

Gf Gf::gen(const GfFieldPtr& F) {
  if (F->degree() == 1) throw MathError("prime field has no generator x");
  Gf x;
  x.F = F;
  x.c[1] = 1;
  return x;
}

Gf Gf::from_index(const GfFieldPtr& F, std::uint64_t i) {
  Gf x;
  x.F = F;
  for (int k = 0; k < F->degree(); ++k) {
    x.c[k] = i % F->p();
    i /= F->p();
  }
  return x;
}

std::uint64_t Gf::index() const {
  std::uint64_t i = 0;
  for (int k = F->degree() - 1; k >= 0; --k) i = i * F->p() + c[k];
  return i;
}

bool Gf::is_zero() const {
  for (auto v : c)
    if (v) return false;
  return true;
}

Gf Gf::inverse() const {
  if (is_zero()) throw MathError("inverse of zero in finite field");
  return pow(*this, static_cast<long long>(F->order() - 2));
}

std::string Gf::str() const {
  if (F->degree() == 1) return std::to_string(c[0]);
  std::string s = "[";
  for (int k = 0; k < F->degree(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + "]";
}

Gf operator+(const Gf& x, const Gf& y) {
  check_same(x, y);
  Gf r;
  r.F = x.F;
  for (int k = 0; k < 4; ++k) r.c[k] = (x.c[k] + y.c[k]) % x.F->p();
  return r;
}

Gf operator-(const Gf& x) {
  Gf r;
  r.F = x.F;
  for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] ? x.F->p() - x.c[k] : 0;
  return r;
}

Gf operator-(const Gf& x, const Gf& y) { return x + (-y); }

Gf operator*(const Gf& x, const Gf& y) {
  check_same(x, y);
  const std::uint64_t p = x.F->p();
  const int n = x.F->degree();
  std::uint64_t prod[8] = {0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x.c[i] * y.c[j]) % p;
  const auto& mod = x.F->modulus();
  for (int k = 2 * n - 2; k >= n; --k) {
    std::uint64_t lead = prod[k];
    if (!lead) continue;
    prod[k] = 0;
    // x^k = x^(k-n) * x^n = -x^(k-n) * sum mod[i] x^i
    for (int i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - mod[i]) % p * lead) % p;
  }
  Gf r;
  r.F = x.F;
  for (int k = 0; k < n; ++k) r.c[k] = prod[k];
  return r;
}

Gf operator/(const Gf& x, const Gf& y) { return x * y.inverse(); }

bool operator==(const Gf& x, const Gf& y) {
  check_same(x, y);
  return x.c == y.c;
}

Gf pow(const Gf& x, long long e) {
  if (e < 0) return pow(x.inverse(), -e);
  Gf r = Gf::from_int(x.F, 1LL), b = x;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Gf pow(const Gf& x, const Int& e) {
  if (e < 0) return pow(x.inverse(), Int(-e));
  Gf r = Gf::from_int(x.F, 1LL), b = x;
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = r * b;
    b = b * b;
    k /= 2;
  }
  return r;
}

std::vector<Gf> all_elements(const GfFieldPtr& F) {
  if (F->order() > kEnumerationLimit) throw MathError("field too large to enumerate");
  std::vector<Gf> out;
  out.reserve(F->order());
  for (std::uint64_t i = 0; i < F->order(); ++i) out.push_back(Gf::from_index(F, i));
  return out;
}

bool is_square(const Gf& x) {
  if (x.is_zero()) return true;
  if (x.F->p() == 2) return true;
  return pow(x, static_cast<long long>((x.F->order() - 1) / 2)) == Gf::from_int(x.F, 1LL);
}

std::optional<Gf> sqrt(const Gf& x) {
  if (!is_square(x)) return std::nullopt;
  for (std::uint64_t i = 0; i < x.F->order(); ++i) {
    Gf y = Gf::from_index(x.F, i);
    if (y * y == x) return y;
    if (i > kEnumerationLimit) break;
  }
  throw MathError("square root search exceeded the enumeration limit");
}

bool is_cube(const Gf& x) {
  if (x.is_zero()) return true;
  std::uint64_t q = x.F->order();
  if ((q - 1) % 3 != 0) return true;
  return pow(x, static_cast<long long>((q - 1) / 3)) == Gf::from_int(x.F, 1LL);
}

std::optional<Gf> cube_root(const Gf& x) {
  if (!is_cube(x)) return std::nullopt;
  if (x.F->order() > kEnumerationLimit) throw MathError("field too large for cube-root search");
  for (std::uint64_t i = 0; i < x.F->order(); ++i) {
    Gf y = Gf::from_index(x.F, i);
    if (y * y * y == x) return y;
  }
  return std::nullopt;
}

std::vector<Gf> primitive_cube_roots_of_unity(const GfFieldPtr& F) {
  std::uint64_t q = F->order();
  if ((q - 1) % 3 != 0) throw MathError(F->describe() + " has no primitive cube root of unity");
  Gf one = Gf::from_int(F, 1LL);
  for (std::uint64_t i = 2; i < q; ++i) {
    Gf g = Gf::from_index(F, i);
    Gf w = pow(g, static_cast<long long>((q - 1) / 3));
    if (w != one) {
      Gf w2 = w * w;
      return w.index() < w2.index() ? std::vector<Gf>{w, w2} : std::vector<Gf>{w2, w};
    }
  }
  throw MathError("no primitive cube root of unity found");
}

int cube_character(const Gf& x, const Gf& w) {
  if (x.is_zero()) throw MathError("cube character of zero");
  std::uint64_t q = x.F->order();
  if ((q - 1) % 3 != 0) throw MathError("cube character needs q = 1 mod 3");
  Gf v = pow(x, static_cast<long long>((q - 1) / 3));
  Gf one = Gf::from_int(x.F, 1LL);
  if (v == one) return 0;
  if (v == w) return 1;
  if (v == w * w) return 2;
  throw MathError("cube character: value is not a cube root of unity");
}

}  // namespace cubebr
