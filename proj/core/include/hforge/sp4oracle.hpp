#pragma once

// The SL2 block of the Iwahori-Hecke convolution over F_q[t]/(t^N): Iwahori
// membership, the two Bruhat cells, the quadratic character on I and the
// coefficients of phi * phi at s and at e.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hforge/check.hpp"
#include "hforge/ffield.hpp"
#include "hforge/heckealg.hpp"

namespace hforge {

/// c_0 + c_1 t + ... + c_{N-1} t^{N-1} in F_q[t]/(t^N).
class TruncSeries {
 public:
  TruncSeries(FqContextPtr field, unsigned N);
  TruncSeries(FqContextPtr field, unsigned N, std::vector<FqElement> coeffs);
  static TruncSeries constant(FqContextPtr field, unsigned N, const FqElement& c);
  static TruncSeries uniformizer(FqContextPtr field, unsigned N);
  static TruncSeries random(FqContextPtr field, unsigned N, std::mt19937_64& rng);

  const FqContextPtr& field() const { return field_; }
  unsigned precision() const { return static_cast<unsigned>(c_.size()); }
  const FqElement& operator[](unsigned i) const { return c_.at(i); }
  /// Reduction mod t.
  const FqElement& residue() const { return c_[0]; }
  /// Index of the first nonzero coefficient, N for zero.
  unsigned valuation() const;
  bool is_zero() const { return valuation() == precision(); }
  bool is_unit() const { return !c_[0].is_zero(); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const FqElement& a) const;
  /// Throws std::domain_error for non-units.
  TruncSeries inv() const;
  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const TruncSeries& o) const;
  FqContextPtr field_;
  std::vector<FqElement> c_;
};

/// 2x2 matrix over F_q[t]/(t^N).
struct Mat2 {
  TruncSeries a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const FqContextPtr& field, unsigned N);
  /// s = [[0, 1], [-1, 0]].
  static Mat2 weyl(const FqContextPtr& field, unsigned N);
  /// u(x) = [[1, x], [0, 1]].
  static Mat2 upper(const TruncSeries& x);
  /// [[1, 0], [x, 1]].
  static Mat2 lower(const TruncSeries& x);
  /// alpha_2^vee(y) = diag(y, y^{-1}), y a unit.
  static Mat2 coroot(const TruncSeries& y);

  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  TruncSeries det() const { return a * d - b * c; }
  bool is_special() const;
  /// Inverse of a determinant-one matrix.
  Mat2 inverse() const;
  std::string to_string() const;
};

enum class TwistChoice { trivial, sign };
std::string twist_name(TwistChoice t);
/// "trivial" or "sign"; throws std::invalid_argument otherwise.
TwistChoice parse_twist(const std::string& s);

/// g in I iff g_21 lies in (t); for det g = 1 the diagonal is then a unit.
/// Throws std::invalid_argument when det g != 1.
bool iwahori_member(const Mat2& g);

struct BruhatDecomposition {
  bool big_cell = false;  // g in IsI
  Mat2 k1;                // g = k1 for the small cell, g = k1 s k2 otherwise
  Mat2 k2;
};

/// Throws std::invalid_argument when det g != 1.
BruhatDecomposition bruhat_decompose(const Mat2& g);

/// Trivial twist: +1. Sign twist: sgn(k_11 mod t). Throws std::invalid_argument for k not in I.
SignValue epsilon_char(const Mat2& k, TwistChoice twist);

/// phi(k1 s k2) = eps(k1) eps(k2), phi(s) = 1, zero off IsI.
int phi_value(const Mat2& g, TwistChoice twist);

/// Summand for one coset representative u(x) s.
struct ConvolutionTerm {
  FqElement x;
  bool left_in_big_cell = false;
  bool right_in_big_cell = false;
  int value = 0;
};

enum class ConvolutionPoint { s, e };

/// (phi * phi)(point) over the representatives u(x) s, x in F_q, one term each.
std::vector<ConvolutionTerm> convolution_terms(TwistChoice twist, const FqContextPtr& field, unsigned N, ConvolutionPoint point);
/// sum_x phi(u(x) s) phi(s^{-1} u(-x) s). Throws std::invalid_argument for even or non-prime-power q, or N < 2.
std::int64_t convolve_s(TwistChoice twist, std::uint64_t q, unsigned N = 3);
/// sum_x phi(u(x) s) phi(s^{-1} u(-x)).
std::int64_t convolve_e(TwistChoice twist, std::uint64_t q, unsigned N = 3);

/// Random elements of I and of SL2 (products of elementary matrices).
Mat2 random_iwahori(const FqContextPtr& field, unsigned N, std::mt19937_64& rng);
Mat2 random_special(const FqContextPtr& field, unsigned N, std::mt19937_64& rng);
/// Random element of IsI.
Mat2 random_big_cell(const FqContextPtr& field, unsigned N, std::mt19937_64& rng);

/// For sampled g in IsI, compares eps(k1) eps(k2) with the value on the
/// decomposition (k1 r, s^{-1} r^{-1} s k2) for random r in I cap sIs^{-1}.
CheckOutcome welldefinedness_check(TwistChoice twist, std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed);

/// {u(x) s} lies in pairwise distinct right I-cosets and every sampled g in IsI
/// lies in one of them.
CheckOutcome coset_completeness_check(std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed);

/// k1 s k2 = g with k1, k2 in I on the big cell; g in I on the small one.
CheckOutcome bruhat_reconstruction_check(std::uint64_t q, unsigned N, std::size_t samples, std::uint64_t seed);

/// phi * phi = a phi + b 1_I.
struct DoubleCosetRelation {
  std::int64_t a = 0;  // (phi * phi)(s)
  std::int64_t b = 0;  // (phi * phi)(e)
};

DoubleCosetRelation double_coset_relation(TwistChoice twist, std::uint64_t q, unsigned N = 3);

/// Rational c != 0 with T -> c T' turning T^2 = a1 T + b1 into T'^2 = a2 T' + b2,
/// i.e. c a2 = a1 and c^2 b2 = b1. Returned as reduced (numerator, denominator).
std::vector<std::pair<std::int64_t, std::int64_t>> rescaling_solutions(const DoubleCosetRelation& from, const DoubleCosetRelation& to);

/// One-generator Hecke algebra over Z with T^2 = a T + b.
HeckeAlgebra rank_one_algebra(const DoubleCosetRelation& rel);

struct TwistWitness {
  DoubleCosetRelation trivial;
  DoubleCosetRelation sign;
  std::vector<std::pair<std::int64_t, std::int64_t>> rescalings;
  /// support_preserving_map_check for c(s) = +1 and -1.
  CheckOutcome plus_one;
  CheckOutcome minus_one;
  /// Linear coefficients differ, no rational rescaling and both unit maps fail.
  bool no_isomorphism = false;
};

TwistWitness twist_necessity_witness(std::uint64_t q, unsigned N = 3);

}  // namespace hforge
