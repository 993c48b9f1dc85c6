#include "hforge/ffield.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hforge {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials over F_p

namespace fp_poly {
namespace {

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const u64 lead_inv = powmod(f.back(), p - 2, p);
  while (a.size() > n) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly powmod_poly(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  base = mod(base, f, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(u64 p, const std::vector<u64>& f_in) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const u64 n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  // x^{p^k} mod f for k = 0..n
  std::vector<Poly> frob{mod(x, f, p)};
  for (u64 k = 1; k <= n; ++k) frob.push_back(powmod_poly(frob.back(), p, f, p));
  if (!sub(frob[n], x, p).empty()) return false;
  for (u64 r : prime_factors(n)) {
    Poly g = gcd(f, sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly

// ---------------------------------------------------------------------------
// SignValue

SignValue SignValue::from_int(int v) {
  if (v != 1 && v != -1) throw std::invalid_argument("SignValue: value must be +1 or -1");
  return SignValue(v);
}

std::ostream& operator<<(std::ostream& os, SignValue s) { return os << (s.is_plus() ? "+1" : "-1"); }

// ---------------------------------------------------------------------------
// FqContext

FqContext::FqContext(u64 p, std::vector<u64> modulus) : p_(p), modulus_(std::move(modulus)) {
  m_ = static_cast<unsigned>(modulus_.size() - 1);
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (q_ > std::numeric_limits<u64>::max() / 4 / p_) throw std::length_error("FqContext: field order too large");
    q_ *= p_;
  }
  build_tables();
}

FqContextPtr FqContext::make(u64 p, std::vector<u64> modulus) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("FqContext: characteristic must be an odd prime");
  if (modulus.size() < 2) throw std::invalid_argument("FqContext: modulus degree must be >= 1");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw std::invalid_argument("FqContext: modulus must be monic");
  if (!fp_poly::is_irreducible(p, modulus)) throw std::invalid_argument("FqContext: modulus is reducible");
  return FqContextPtr(new FqContext(p, std::move(modulus)));
}

FqContextPtr FqContext::of_order(u64 q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("FqContext: order must be an odd prime power");
  u64 p = 3;
  while (p * p <= q && q % p != 0) p += 2;
  if (q % p != 0) p = q;
  unsigned m = 0;
  for (u64 r = q; r > 1; r /= p) {
    if (r % p != 0) throw std::invalid_argument("FqContext: order must be an odd prime power");
    ++m;
  }
  return make(p, m);
}

FqContextPtr FqContext::make(u64 p, unsigned m) {
  if (m == 0) throw std::invalid_argument("FqContext: degree must be >= 1");
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("FqContext: characteristic must be an odd prime");
  if (m == 1) return make(p, std::vector<u64>{0, 1});
  // Enumerate monic polynomials with (c_0, ..., c_{m-1}) in lexicographic order.
  std::vector<u64> coeffs(m, 0);
  while (true) {
    std::vector<u64> f = coeffs;
    f.push_back(1);
    if (fp_poly::is_irreducible(p, f)) return make(p, std::move(f));
    // Lexicographic successor with c_0 most significant.
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && coeffs[i] == p - 1) {
      coeffs[i] = 0;
      --i;
    }
    if (i < 0) throw std::logic_error("FqContext: no irreducible polynomial found");
    ++coeffs[i];
  }
}

void FqContext::build_tables() {
  if (m_ == 1 || q_ > (1u << 20)) return;
  // Find a primitive element by brute force on the order.
  const auto factors = prime_factors(q_ - 1);
  auto pw = [&](u64 base, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, base);
      base = poly_mul(base, base);
      e >>= 1;
    }
    return r;
  };
  u64 g = 0;
  for (u64 cand = 2; cand < q_; ++cand) {
    bool primitive = true;
    for (u64 r : factors) {
      if (pw(cand, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("FqContext: no primitive element");
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  u64 cur = 1;
  for (u64 k = 0; k + 1 < q_; ++k) {
    exp_[k] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = poly_mul(cur, g);
  }
}

std::vector<u64> FqContext::coeffs_of(u64 index) const {
  std::vector<u64> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return c;
}

u64 FqContext::index_of(std::span<const u64> coeffs) const {
  if (coeffs.size() > m_) throw std::invalid_argument("FqContext: too many coefficients");
  u64 idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) idx = idx * p_ + coeffs[i] % p_;
  return idx;
}

u64 FqContext::add(u64 a, u64 b) const {
  if (m_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    u64 d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

u64 FqContext::neg(u64 a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  u64 r = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    u64 d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

u64 FqContext::poly_mul(u64 a, u64 b) const {
  auto ca = coeffs_of(a);
  auto cb = coeffs_of(b);
  std::vector<u64> prod(2 * m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p_)) % p_;
  }
  for (std::size_t k = prod.size(); k-- > m_;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      prod[k - m_ + i] = (prod[k - m_ + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
  }
  prod.resize(m_);
  return index_of(prod);
}

u64 FqContext::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return mulmod(a, b, p_);
  if (!exp_.empty()) return exp_[(static_cast<u64>(log_[a]) + log_[b]) % (q_ - 1)];
  return poly_mul(a, b);
}

u64 FqContext::inv(u64 a) const {
  if (a == 0) throw std::domain_error("FqElement: inverse of zero");
  if (m_ == 1) return powmod(a, p_ - 2, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  u64 r = 1, base = a, e = q_ - 2;
  while (e) {
    if (e & 1) r = poly_mul(r, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return r;
}

FqElement FqContext::zero() const { return FqElement(this, 0); }
FqElement FqContext::one() const { return FqElement(this, 1); }

FqElement FqContext::from_int(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p_);
  std::int64_t r = v % pp;
  if (r < 0) r += pp;
  return FqElement(this, static_cast<u64>(r));
}

FqElement FqContext::from_coeffs(std::span<const u64> coeffs) const { return FqElement(this, index_of(coeffs)); }

FqElement FqContext::from_index(u64 index) const {
  if (index >= q_) throw std::out_of_range("FqContext: element index out of range");
  return FqElement(this, index);
}

FqElement FqContext::generator() const {
  if (m_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
  return FqElement(this, p_);
}

std::vector<FqElement> FqContext::elements() const {
  std::vector<FqElement> out;
  out.reserve(q_);
  for (u64 i = 0; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

std::vector<FqElement> FqContext::nonzero_elements() const {
  std::vector<FqElement> out;
  out.reserve(q_ - 1);
  for (u64 i = 1; i < q_; ++i) out.emplace_back(this, i);
  return out;
}

bool FqContext::same_field(const FqContext& other) const {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

// ---------------------------------------------------------------------------
// FqElement

const FqContext& FqElement::context() const {
  if (!ctx_) throw std::logic_error("FqElement: uninitialised element");
  return *ctx_;
}

void FqElement::check_same(const FqElement& o) const {
  if (ctx_ != o.ctx_ && !context().same_field(o.context())) {
    throw std::invalid_argument("FqElement: context mismatch");
  }
}

bool FqElement::is_one() const { return idx_ == 1; }

FqElement FqElement::operator+(const FqElement& o) const {
  check_same(o);
  return FqElement(ctx_, ctx_->add(idx_, o.idx_));
}

FqElement FqElement::operator-(const FqElement& o) const {
  check_same(o);
  return FqElement(ctx_, ctx_->add(idx_, ctx_->neg(o.idx_)));
}

FqElement FqElement::operator*(const FqElement& o) const {
  check_same(o);
  return FqElement(ctx_, ctx_->mul(idx_, o.idx_));
}

FqElement FqElement::operator/(const FqElement& o) const {
  check_same(o);
  return FqElement(ctx_, ctx_->mul(idx_, ctx_->inv(o.idx_)));
}

FqElement FqElement::operator-() const { return FqElement(ctx_, context().neg(idx_)); }

FqElement FqElement::inv() const { return FqElement(ctx_, context().inv(idx_)); }

FqElement FqElement::pow(u64 e) const {
  FqElement r = context().one();
  FqElement b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool FqElement::operator==(const FqElement& o) const {
  if (ctx_ == o.ctx_) return idx_ == o.idx_;
  if (!ctx_ || !o.ctx_) return false;
  return ctx_->same_field(*o.ctx_) && idx_ == o.idx_;
}

std::string FqElement::to_string() const {
  const auto& c = context();
  if (c.degree() == 1) return std::to_string(idx_);
  std::ostringstream os;
  os << '[';
  auto co = coeffs();
  for (std::size_t i = 0; i < co.size(); ++i) os << (i ? "," : "") << co[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqElement& a) { return os << a.to_string(); }

bool coeff_lex_less(const FqElement& a, const FqElement& b) {
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

SignValue sgn(const FqElement& a) {
  if (a.is_zero()) throw std::domain_error("sgn: zero has no quadratic character");
  const u64 q = a.context().order();
  return a.pow((q - 1) / 2).is_one() ? SignValue::plus() : SignValue::minus();
}

std::optional<FqElement> square_root(const FqElement& a) {
  const FqContext& ctx = a.context();
  if (a.is_zero()) return ctx.zero();
  if (!sgn(a).is_plus()) return std::nullopt;
  const u64 q = ctx.order();
  FqElement root;
  if (q <= 10000) {
    for (u64 i = 1; i < q; ++i) {
      FqElement r = ctx.from_index(i);
      if (r * r == a) {
        root = r;
        break;
      }
    }
  } else {
    // Tonelli-Shanks in F_q.
    u64 Q = q - 1;
    unsigned S = 0;
    while ((Q & 1) == 0) {
      Q >>= 1;
      ++S;
    }
    FqElement z;
    for (u64 i = 2; i < q; ++i) {
      FqElement c = ctx.from_index(i);
      if (!sgn(c).is_plus()) {
        z = c;
        break;
      }
    }
    unsigned M = S;
    FqElement c = z.pow(Q);
    FqElement t = a.pow(Q);
    FqElement R = a.pow((Q + 1) / 2);
    while (!t.is_one()) {
      unsigned i = 0;
      FqElement tt = t;
      while (!tt.is_one()) {
        tt *= tt;
        ++i;
      }
      FqElement b = c;
      for (unsigned k = 0; k + i + 1 < M; ++k) b *= b;
      M = i;
      c = b * b;
      t *= c;
      R *= b;
    }
    root = R;
  }
  FqElement other = -root;
  return coeff_lex_less(other, root) ? other : root;
}

// ---------------------------------------------------------------------------
// FieldEmbedding and adjunction of sqrt(-1)

FieldEmbedding::FieldEmbedding(FqContextPtr from, FqContextPtr to, FqElement generator_image)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_->characteristic() != to_->characteristic()) {
    throw std::invalid_argument("FieldEmbedding: characteristic mismatch");
  }
  FqElement cur = to_->one();
  for (unsigned i = 0; i < from_->degree(); ++i) {
    powers_.push_back(cur);
    cur *= generator_image;
  }
}

FqElement FieldEmbedding::operator()(const FqElement& a) const {
  if (from_ == to_) return a;
  if (!a.context().same_field(*from_)) throw std::invalid_argument("FieldEmbedding: element not in source field");
  auto c = a.coeffs();
  FqElement r = to_->zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) r += to_->from_int(static_cast<std::int64_t>(c[i])) * powers_[i];
  }
  return r;
}

std::optional<FqElement> FieldEmbedding::preimage(const FqElement& a) const {
  if (from_ == to_) return a;
  // Solve sum c_i powers_[i] = a over F_p by Gaussian elimination on coordinates.
  const u64 p = from_->characteristic();
  const unsigned m = from_->degree();
  const unsigned n = to_->degree();
  // Augmented n x (m+1) system.
  std::vector<std::vector<u64>> rows(n, std::vector<u64>(m + 1, 0));
  for (unsigned j = 0; j < m; ++j) {
    auto col = powers_[j].coeffs();
    for (unsigned i = 0; i < n; ++i) rows[i][j] = col[i];
  }
  auto rhs = a.coeffs();
  for (unsigned i = 0; i < n; ++i) rows[i][m] = rhs[i];
  std::vector<int> pivot_col;
  unsigned r = 0;
  for (unsigned c = 0; c < m && r < n; ++c) {
    unsigned piv = r;
    while (piv < n && rows[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    const u64 iv = powmod(rows[r][c], p - 2, p);
    for (auto& v : rows[r]) v = mulmod(v, iv, p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 f = rows[i][c];
      for (unsigned k = 0; k <= m; ++k) rows[i][k] = (rows[i][k] + p - mulmod(f, rows[r][k], p)) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (unsigned i = r; i < n; ++i) {
    if (rows[i][m] != 0) return std::nullopt;
  }
  std::vector<u64> sol(m, 0);
  for (unsigned i = 0; i < r; ++i) sol[pivot_col[i]] = rows[i][m];
  return from_->from_coeffs(sol);
}

ZetaAdjunction adjoin_zeta(const FqContextPtr& ctx) {
  const FqElement minus_one = -ctx->one();
  if (sgn(minus_one).is_plus()) {
    return {ctx, FieldEmbedding(ctx, ctx, ctx->generator()), *square_root(minus_one)};
  }
  const u64 p = ctx->characteristic();
  const unsigned m = ctx->degree();
  FqContextPtr ext = (m == 1) ? FqContext::make(p, std::vector<u64>{1, 0, 1}) : FqContext::make(p, 2 * m);
  FqElement image;
  if (m == 1) {
    image = ext->from_int(-static_cast<std::int64_t>(ctx->modulus()[0]));
  } else {
    if (ext->order() > (1u << 24)) throw std::length_error("adjoin_zeta: extension too large for root search");
    const auto& f = ctx->modulus();
    bool found = false;
    for (u64 i = 0; i < ext->order() && !found; ++i) {
      FqElement r = ext->from_index(i);
      FqElement acc = ext->zero();
      for (std::size_t k = f.size(); k-- > 0;) acc = acc * r + ext->from_int(static_cast<std::int64_t>(f[k]));
      if (acc.is_zero()) {
        image = r;
        found = true;
      }
    }
    if (!found) throw std::logic_error("adjoin_zeta: modulus has no root in the extension");
  }
  FqElement zeta = *square_root(-ext->one());
  return {ext, FieldEmbedding(ctx, ext, image), zeta};
}

}  // namespace hforge
