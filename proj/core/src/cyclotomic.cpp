#include "hforge/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hforge {

namespace {

using i64 = std::int64_t;

i64 add_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: coefficient overflow");
  return r;
}

i64 mul_checked(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: coefficient overflow");
  return r;
}

using Poly = std::vector<i64>;

// Exact quotient of a by a monic b.
Poly divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  Poly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const i64 c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = add_checked(a[k - db + i], -mul_checked(c, b[i]));
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  return q;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_checked(r[i + j], mul_checked(a[i], b[j]));
  return r;
}

Poly cyclotomic_polynomial(std::uint32_t n) {
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  Poly den{1};
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) den = multiply(den, cyclotomic_polynomial(d));
  return divide_monic(num, den);
}

}  // namespace

CyclotomicFieldPtr CyclotomicField::make(std::uint32_t conductor) {
  static std::mutex mu;
  static std::map<std::uint32_t, CyclotomicFieldPtr> cache;
  if (conductor == 0) throw std::invalid_argument("CyclotomicField: conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  CyclotomicFieldPtr f(new CyclotomicField(conductor));
  cache.emplace(conductor, f);
  return f;
}

CyclotomicField::CyclotomicField(std::uint32_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {
  deg_ = phi_.size() - 1;
  powers_.assign(n_, std::vector<i64>(deg_, 0));
  std::vector<i64> cur(deg_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < n_; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce x^deg = -sum phi_i x^i
    const i64 top = cur[deg_ - 1];
    for (std::size_t i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg_; ++i) cur[i] = add_checked(cur[i], -mul_checked(top, phi_[i]));
  }
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(const CyclotomicField* f, std::vector<i64> num, i64 den) : field_(f), num_(std::move(num)), den_(den) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ == 0) throw std::domain_error("cyclotomic: zero denominator");
  i64 g = den_ < 0 ? -den_ : den_;
  for (i64 c : num_) g = std::gcd(g, c < 0 ? -c : c);
  if (den_ < 0) g = -g;
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
  bool zero = true;
  for (i64 c : num_) zero = zero && c == 0;
  if (zero) den_ = 1;
}

Cyclotomic Cyclotomic::zero(const CyclotomicField& f) { return Cyclotomic(&f, std::vector<i64>(f.degree(), 0), 1); }

Cyclotomic Cyclotomic::one(const CyclotomicField& f) { return rational(f, 1, 1); }

Cyclotomic Cyclotomic::rational(const CyclotomicField& f, i64 num, i64 den) {
  std::vector<i64> c(f.degree(), 0);
  c[0] = num;
  return Cyclotomic(&f, std::move(c), den);
}

Cyclotomic Cyclotomic::zeta(const CyclotomicField& f, i64 k) {
  const i64 n = f.conductor();
  return Cyclotomic(&f, f.power(static_cast<std::uint32_t>(((k % n) + n) % n)), 1);
}

Cyclotomic Cyclotomic::from_coefficients(const CyclotomicField& f, std::vector<i64> num, i64 den) {
  if (num.size() != f.degree()) throw std::invalid_argument("cyclotomic: coefficient vector has wrong length");
  return Cyclotomic(&f, std::move(num), den);
}

bool Cyclotomic::is_zero() const {
  for (i64 c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (field_ != o.field_ || !field_) throw std::invalid_argument("cyclotomic: field mismatch");
  const i64 g = std::gcd(den_, o.den_);
  const i64 a = o.den_ / g, b = den_ / g;
  std::vector<i64> r(num_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add_checked(mul_checked(num_[i], a), mul_checked(o.num_[i], b));
  return Cyclotomic(field_, std::move(r), mul_checked(den_, a));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<i64> r(num_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -num_[i];
  return Cyclotomic(field_, std::move(r), den_);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (field_ != o.field_ || !field_) throw std::invalid_argument("cyclotomic: field mismatch");
  const std::size_t d = num_.size();
  std::vector<i64> buf(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.num_[j] == 0) continue;
      buf[i + j] = add_checked(buf[i + j], mul_checked(num_[i], o.num_[j]));
    }
  }
  std::vector<i64> r(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < buf.size(); ++k) {
    if (buf[k] == 0) continue;
    const auto& p = field_->power(static_cast<std::uint32_t>(k));
    for (std::size_t i = 0; i < d; ++i)
      if (p[i] != 0) r[i] = add_checked(r[i], mul_checked(buf[k], p[i]));
  }
  return Cyclotomic(field_, std::move(r), mul_checked(den_, o.den_));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inv(); }

Cyclotomic Cyclotomic::scaled(i64 num, i64 den) const {
  std::vector<i64> r(num_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mul_checked(num_[i], num);
  return Cyclotomic(field_, std::move(r), mul_checked(den_, den));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return field_ == o.field_ && den_ == o.den_ && num_ == o.num_;
}

Cyclotomic Cyclotomic::galois(i64 k) const {
  const i64 n = field_->conductor();
  const i64 kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw std::invalid_argument("cyclotomic: Galois exponent not coprime to the conductor");
  std::vector<i64> r(num_.size(), 0);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    const auto& p = field_->power(static_cast<std::uint32_t>((static_cast<i64>(j) * kk) % n));
    for (std::size_t i = 0; i < r.size(); ++i)
      if (p[i] != 0) r[i] = add_checked(r[i], mul_checked(num_[j], p[i]));
  }
  return Cyclotomic(field_, std::move(r), den_);
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw std::domain_error("cyclotomic: inverse of zero");
  const i64 n = field_->conductor();
  Cyclotomic rest = one(*field_);
  for (i64 k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) rest *= galois(k);
  const Cyclotomic norm = *this * rest;
  if (!norm.is_rational()) throw std::logic_error("cyclotomic: norm is not rational");
  // rest / (a / b) = rest * b / a
  i64 a = norm.num_[0], b = norm.den_;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  return rest.scaled(b, a);
}

std::vector<std::string> Cyclotomic::coefficient_strings() const {
  std::vector<std::string> out;
  for (i64 c : num_) {
    const i64 g = std::gcd(c < 0 ? -c : c, den_);
    const i64 nn = g ? c / g : 0, dd = g ? den_ / g : 1;
    out.push_back(dd == 1 ? std::to_string(nn) : std::to_string(nn) + "/" + std::to_string(dd));
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto parts = coefficient_strings();
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(const CyclotomicField& f, std::size_t n) : field_(&f), n_(n), data_(n * n, Cyclotomic::zero(f)) {}

CycloMatrix CycloMatrix::identity(const CyclotomicField& f, std::size_t n) {
  CycloMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic::one(f);
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("CycloMatrix: shape mismatch");
  CycloMatrix r(*field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Cyclotomic& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const Cyclotomic& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
  if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("CycloMatrix: shape mismatch");
  CycloMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
  if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("CycloMatrix: shape mismatch");
  CycloMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

CycloMatrix CycloMatrix::scaled(const Cyclotomic& c) const {
  CycloMatrix r = *this;
  for (auto& e : r.data_) e *= c;
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const { return n_ == o.n_ && field_ == o.field_ && data_ == o.data_; }

Cyclotomic CycloMatrix::trace() const {
  Cyclotomic t = Cyclotomic::zero(*field_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool CycloMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool CycloMatrix::is_identity() const { return *this == identity(*field_, n_); }

bool CycloMatrix::is_scalar() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i == j ? !((*this)(i, i) == (*this)(0, 0)) : !(*this)(i, j).is_zero()) return false;
  return true;
}

}  // namespace hforge
