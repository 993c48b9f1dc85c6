#pragma once

// Graded quadratic spaces with an involutive block index, the group generated
// by block-permuting f-rational isometries and zeta-scalings of asymmetric
// blocks, and the mu_4-valued extension of sgn o sn to that group.

#include <optional>
#include <string>
#include <vector>

#include "hforge/ffield.hpp"
#include "hforge/linalg.hpp"
#include "hforge/quadspace.hpp"

namespace hforge {

/// Formal cyclic group of order 4, written i^k.
class Mu4Value {
 public:
  constexpr Mu4Value() = default;
  static constexpr Mu4Value power_of_i(int k) { return Mu4Value(k); }
  static constexpr Mu4Value one() { return Mu4Value(0); }
  static constexpr Mu4Value i() { return Mu4Value(1); }
  static constexpr Mu4Value minus_one() { return Mu4Value(2); }
  static constexpr Mu4Value minus_i() { return Mu4Value(3); }
  static Mu4Value from_sign(SignValue s) { return s.is_plus() ? one() : minus_one(); }
  /// Parses "1", "i", "-1", "-i".
  static Mu4Value parse(const std::string& s);

  constexpr int exponent() const { return k_; }
  constexpr Mu4Value operator*(Mu4Value o) const { return Mu4Value(k_ + o.k_); }
  constexpr Mu4Value pow(int e) const { return Mu4Value(k_ * e); }
  constexpr bool operator==(const Mu4Value&) const = default;
  std::string to_string() const;

 private:
  constexpr explicit Mu4Value(int k) : k_(static_cast<std::int8_t>(((k % 4) + 4) % 4)) {}
  std::int8_t k_ = 0;
};

enum class OrbitKind { asym, sym };

/// One orbit {label, -label} of the block index. An asymmetric orbit of
/// f-dimension d occupies d/2 coordinates for `label` followed by d/2 for
/// `-label`; a symmetric orbit is a single self-paired label.
struct BlockOrbit {
  std::string label;
  OrbitKind kind = OrbitKind::sym;
  std::size_t dim = 0;
};

class BlockIndex {
 public:
  explicit BlockIndex(std::vector<BlockOrbit> orbits);

  const std::vector<BlockOrbit>& orbits() const { return orbits_; }
  std::size_t orbit_count() const { return orbits_.size(); }
  std::size_t offset(std::size_t orbit) const { return offsets_.at(orbit); }
  std::size_t dim(std::size_t orbit) const { return orbits_.at(orbit).dim; }
  OrbitKind kind(std::size_t orbit) const { return orbits_.at(orbit).kind; }
  std::size_t total_dim() const { return total_; }
  /// Orbit containing coordinate i.
  std::size_t orbit_of_coordinate(std::size_t i) const;

  /// All labels; asymmetric orbits contribute both `l` and `-l`.
  std::vector<std::string> labels() const;
  std::string negate(const std::string& label) const;
  std::optional<std::size_t> find_orbit(const std::string& label) const;

 private:
  std::vector<BlockOrbit> orbits_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

class GradedQuadraticSpace {
 public:
  /// `root` is the chosen square root of sgn_f(-1) in mu_4; by default +1 when
  /// sgn_f(-1) = +1 and i otherwise.
  GradedQuadraticSpace(FqContextPtr field, BlockIndex index, FqMatrix gram, std::optional<Mu4Value> root = {});

  const QuadraticSpace& form() const { return form_; }
  const BlockIndex& index() const { return index_; }
  const FqContextPtr& base_field() const { return form_.context_ptr(); }
  const FqContextPtr& extension_field() const { return ext_.field; }
  const FqElement& zeta() const { return ext_.zeta; }
  Mu4Value root() const { return root_; }
  std::size_t dim() const { return form_.dim(); }

  FqMatrix lift(const FqMatrix& m) const;
  std::optional<FqMatrix> descend(const FqMatrix& m) const;

 private:
  QuadraticSpace form_;
  BlockIndex index_;
  ZetaAdjunction ext_;
  Mu4Value root_;
};

struct ExtendedOrthogonalElement {
  FqMatrix matrix;  // over f'
  std::vector<std::size_t> block_permutation;
};

/// Block permutation induced by g if g maps every orbit block onto an orbit
/// block of the same kind and dimension; nullopt otherwise.
std::optional<std::vector<std::size_t>> glplus_membership(const GradedQuadraticSpace& space, const FqMatrix& g);

/// Multiplication by zeta on one asymmetric orbit block, identity elsewhere.
ExtendedOrthogonalElement zeta_scaling(const GradedQuadraticSpace& space, std::size_t orbit);

/// f-rational isometry viewed over f'.
ExtendedOrthogonalElement lift_isometry(const GradedQuadraticSpace& space, const OrthogonalMap& h);

/// g = h * prod_{b : exponent[b]} zeta_b with h an f-rational isometry in GL+.
struct OtildeDecomposition {
  OrthogonalMap h;
  std::vector<bool> zeta_exponent;  // per orbit
  std::vector<std::size_t> block_permutation;
};

std::optional<OtildeDecomposition> otilde_membership(const GradedQuadraticSpace& space, const FqMatrix& g);

/// Throws std::domain_error when g is not in the group.
Mu4Value extended_sn(const GradedQuadraticSpace& space, const FqMatrix& g);

/// Closure of a generating set under multiplication (small groups only).
std::vector<FqMatrix> generate_group(const std::vector<FqMatrix>& generators, std::size_t limit = 100000);

}  // namespace hforge
