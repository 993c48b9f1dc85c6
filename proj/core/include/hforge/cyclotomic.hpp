#pragma once

// Exact arithmetic in Q(zeta_N): rational coefficient vectors in the power
// basis 1, x, ..., x^{phi(N)-1} modulo the N-th cyclotomic polynomial.
// Coefficients are int64 numerators over a common int64 denominator; any
// intermediate overflow throws std::overflow_error.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hforge {

class CyclotomicField;
using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

class CyclotomicField {
 public:
  /// Cached per conductor.
  static CyclotomicFieldPtr make(std::uint32_t conductor);

  std::uint32_t conductor() const { return n_; }
  std::size_t degree() const { return deg_; }
  /// Coefficients of Phi_N, constant term first, monic.
  const std::vector<std::int64_t>& modulus() const { return phi_; }
  /// Reduced power-basis vector of x^k for 0 <= k < N.
  const std::vector<std::int64_t>& power(std::uint32_t k) const { return powers_[k % n_]; }

 private:
  explicit CyclotomicField(std::uint32_t n);
  std::uint32_t n_;
  std::size_t deg_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;
};

class Cyclotomic {
 public:
  Cyclotomic() = default;
  static Cyclotomic zero(const CyclotomicField& f);
  static Cyclotomic one(const CyclotomicField& f);
  static Cyclotomic rational(const CyclotomicField& f, std::int64_t num, std::int64_t den = 1);
  /// zeta_N^k.
  static Cyclotomic zeta(const CyclotomicField& f, std::int64_t k);
  /// num / den in the power basis; num.size() must equal the field degree.
  static Cyclotomic from_coefficients(const CyclotomicField& f, std::vector<std::int64_t> num, std::int64_t den = 1);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(std::int64_t num, std::int64_t den = 1) const;
  bool operator==(const Cyclotomic& o) const;

  /// Image under zeta -> zeta^k, k coprime to N.
  Cyclotomic galois(std::int64_t k) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  Cyclotomic conj() const { return galois(-1); }
  /// |z|^2 = z * conj(z).
  Cyclotomic abs2() const { return *this * conj(); }
  /// Throws std::domain_error for zero.
  Cyclotomic inv() const;

  /// ["a/b", ...] style rendering of the coefficient vector.
  std::vector<std::string> coefficient_strings() const;
  std::string to_string() const;

 private:
  Cyclotomic(const CyclotomicField* f, std::vector<std::int64_t> num, std::int64_t den);
  void normalize();

  const CyclotomicField* field_ = nullptr;
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// Dense square matrix over Q(zeta_N).
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(const CyclotomicField& f, std::size_t n);
  static CycloMatrix identity(const CyclotomicField& f, std::size_t n);

  std::size_t size() const { return n_; }
  const CyclotomicField& field() const { return *field_; }
  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix operator+(const CycloMatrix& o) const;
  CycloMatrix operator-(const CycloMatrix& o) const;
  CycloMatrix scaled(const Cyclotomic& c) const;
  bool operator==(const CycloMatrix& o) const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_scalar() const;

 private:
  const CyclotomicField* field_ = nullptr;
  std::size_t n_ = 0;
  std::vector<Cyclotomic> data_;
};

}  // namespace hforge
