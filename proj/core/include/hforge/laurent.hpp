#pragma once

// Integer Laurent polynomials in a fixed number of named parameters.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hforge/ffield.hpp"

namespace hforge {

class LaurentPoly {
 public:
  using Exponents = std::vector<std::int32_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
  static LaurentPoly constant(std::size_t nvars, std::int64_t c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(Exponents exps, std::int64_t coeff = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value when constant; throws otherwise.
  std::int64_t constant_value() const;
  /// +-monomial, the invertible elements.
  bool is_unit() const;
  LaurentPoly unit_inverse() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Substitutes nonzero field elements for the parameters.
  FqElement specialize(const std::vector<FqElement>& values) const;
  /// Substitutes integers; negative exponents are allowed only for values +-1.
  std::int64_t evaluate(const std::vector<std::int64_t>& values) const;

  /// Terms in decreasing exponent order, e.g. "q0^2 - 3*q0*q1^-1 + 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, std::int64_t c);
  void check_compatible(const LaurentPoly& o) const;

  std::size_t nvars_ = 0;
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace hforge
