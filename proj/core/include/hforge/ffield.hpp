#pragma once

// Exact arithmetic in finite fields F_q, q = p^m with p an odd prime.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hforge {

class FqContext;
class FqElement;
using FqContextPtr = std::shared_ptr<const FqContext>;

/// An element of {+1, -1}.
class SignValue {
 public:
  constexpr SignValue() = default;
  static constexpr SignValue plus() { return SignValue(1); }
  static constexpr SignValue minus() { return SignValue(-1); }
  static SignValue from_int(int v);

  constexpr int value() const { return v_; }
  constexpr bool is_plus() const { return v_ == 1; }
  constexpr SignValue operator*(SignValue o) const { return SignValue(v_ * o.v_); }
  constexpr SignValue& operator*=(SignValue o) { v_ = static_cast<std::int8_t>(v_ * o.v_); return *this; }
  constexpr bool operator==(const SignValue&) const = default;

 private:
  constexpr explicit SignValue(int v) : v_(static_cast<std::int8_t>(v)) {}
  std::int8_t v_ = 1;
};

std::ostream& operator<<(std::ostream& os, SignValue s);

/// F_p[x]/(modulus). Elements are addressed by the index sum c_i p^i of their
/// coefficient sequence (c_0, ..., c_{m-1}).
///
/// Contexts are immutable and shared; every FqElement keeps a raw pointer to
/// its context, so the owning FqContextPtr must outlive the elements.
class FqContext {
 public:
  /// Least lexicographic monic irreducible modulus of degree m, comparing
  /// coefficient sequences from the constant term upward.
  static FqContextPtr make(std::uint64_t p, unsigned m = 1);
  /// Explicit modulus, coefficients low to high, monic of degree >= 1.
  static FqContextPtr make(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// F_q for an odd prime power q; throws std::invalid_argument otherwise.
  static FqContextPtr of_order(std::uint64_t q);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(std::int64_t v) const;
  FqElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  FqElement from_index(std::uint64_t index) const;
  /// Residue class of x.
  FqElement generator() const;
  /// All q elements in index order.
  std::vector<FqElement> elements() const;
  std::vector<FqElement> nonzero_elements() const;

  bool same_field(const FqContext& other) const;

  // Index-level arithmetic; used by FqElement.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::vector<std::uint64_t> coeffs_of(std::uint64_t index) const;
  std::uint64_t index_of(std::span<const std::uint64_t> coeffs) const;

 private:
  FqContext(std::uint64_t p, std::vector<std::uint64_t> modulus);
  std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) const;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  // Discrete log tables over a primitive element, when q is small enough.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

class FqElement {
 public:
  FqElement() = default;
  FqElement(const FqContext* ctx, std::uint64_t index) : ctx_(ctx), idx_(index) {}

  const FqContext& context() const;
  const FqContext* context_ptr() const { return ctx_; }
  std::uint64_t index() const { return idx_; }
  std::vector<std::uint64_t> coeffs() const { return context().coeffs_of(idx_); }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const;
  bool valid() const { return ctx_ != nullptr; }

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator/(const FqElement& o) const;
  FqElement operator-() const;
  FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
  FqElement& operator-=(const FqElement& o) { return *this = *this - o; }
  FqElement& operator*=(const FqElement& o) { return *this = *this * o; }

  FqElement inv() const;
  FqElement pow(std::uint64_t e) const;

  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const FqElement& o) const;
  const FqContext* ctx_ = nullptr;
  std::uint64_t idx_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FqElement& a);

/// Lexicographic comparison of coefficient sequences (constant term first).
bool coeff_lex_less(const FqElement& a, const FqElement& b);

/// Quadratic-residue character of F_q^x. Throws for zero.
SignValue sgn(const FqElement& a);

/// A square root of a, or nullopt for non-squares. Of the two roots the one
/// with the lexicographically least coefficient sequence is returned.
std::optional<FqElement> square_root(const FqElement& a);

/// Ring embedding F_q -> F_q'.
class FieldEmbedding {
 public:
  FieldEmbedding() = default;
  FieldEmbedding(FqContextPtr from, FqContextPtr to, FqElement generator_image);

  const FqContextPtr& source() const { return from_; }
  const FqContextPtr& target() const { return to_; }
  bool is_identity() const { return from_ == to_; }

  FqElement operator()(const FqElement& a) const;
  /// Inverse image, if a lies in the image.
  std::optional<FqElement> preimage(const FqElement& a) const;

 private:
  FqContextPtr from_;
  FqContextPtr to_;
  std::vector<FqElement> powers_;  // images of x^0 .. x^{m-1}
};

struct ZetaAdjunction {
  FqContextPtr field;  // f' = f(zeta)
  FieldEmbedding embedding;
  FqElement zeta;
};

/// Adjoins a square root of -1. Returns the input field itself when -1 is
/// already a square there.
ZetaAdjunction adjoin_zeta(const FqContextPtr& ctx);

/// Polynomial helpers over F_p, coefficients low to high.
namespace fp_poly {
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f);
}

}  // namespace hforge
