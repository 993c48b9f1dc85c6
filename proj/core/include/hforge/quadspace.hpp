#pragma once

// Quadratic spaces over F_q, reflections, Cartan-Dieudonne factorisation and
// the spinor norm.

#include <random>
#include <vector>

#include "hforge/ffield.hpp"
#include "hforge/linalg.hpp"

namespace hforge {

/// Element of F_q^x / (F_q^x)^2.
enum class SquareClass { trivial, nonsquare };

SquareClass operator*(SquareClass a, SquareClass b);
SquareClass square_class_of(const FqElement& a);
/// sgn_f evaluated on a class representative.
SignValue sgn(SquareClass c);
const char* to_string(SquareClass c);

/// Nondegenerate symmetric bilinear form B on F_q^n. The quadratic form is
/// phi(v) = B(v, v) / 2.
class QuadraticSpace {
 public:
  QuadraticSpace(FqContextPtr ctx, FqMatrix gram);

  const FqContextPtr& context_ptr() const { return ctx_; }
  const FqContext& context() const { return *ctx_; }
  std::size_t dim() const { return gram_.rows(); }
  const FqMatrix& gram() const { return gram_; }

  FqElement bilinear(const FqVector& u, const FqVector& v) const;
  FqElement evaluate_form(const FqVector& v) const;
  bool is_orthogonal(const FqMatrix& m) const;
  bool operator==(const QuadraticSpace& o) const;

 private:
  FqContextPtr ctx_;
  FqMatrix gram_;
};

class OrthogonalMap {
 public:
  OrthogonalMap(const QuadraticSpace& space, FqMatrix matrix);
  static OrthogonalMap identity(const QuadraticSpace& space);

  const QuadraticSpace& space() const { return space_; }
  const FqMatrix& matrix() const { return matrix_; }
  OrthogonalMap operator*(const OrthogonalMap& o) const;
  OrthogonalMap inverse() const;
  bool is_identity() const { return matrix_.is_identity(); }
  bool operator==(const OrthogonalMap& o) const { return matrix_ == o.matrix_; }

 private:
  QuadraticSpace space_;
  FqMatrix matrix_;
};

/// r_v(w) = w - B(w, v) / phi(v) * v. Throws for isotropic v.
OrthogonalMap reflection(const QuadraticSpace& space, const FqVector& v);

/// Order in which candidate vectors are searched during factorisation. The
/// seeded variant gives an independent factorisation of the same map.
struct FactorizationStrategy {
  enum class Order { forward, reverse, seeded } order = Order::forward;
  std::uint64_t seed = 0;
};

/// Anisotropic vectors v_1..v_k with g = r_{v_1} ... r_{v_k}. Empty iff g = id.
std::vector<FqVector> factor_into_reflections(const OrthogonalMap& g, FactorizationStrategy strategy = {});

SquareClass spinor_norm(const OrthogonalMap& g, FactorizationStrategy strategy = {});
SignValue sgn_spinor(const OrthogonalMap& g);

/// V1 + V2 with block-diagonal Gram matrix.
struct OrthogonalSum {
  QuadraticSpace space;
  std::size_t split;  // dim V1

  OrthogonalMap embed(const OrthogonalMap& g1, const OrthogonalMap& g2) const;
};

OrthogonalSum orthogonal_sum(const QuadraticSpace& v1, const QuadraticSpace& v2);

/// Every element of O(V)(F_q), by column-wise backtracking. Intended for
/// exhaustive checks on small spaces.
std::vector<OrthogonalMap> enumerate_orthogonal_group(const QuadraticSpace& space);

/// Random element of O(V)(F_q) as a product of random reflections.
OrthogonalMap random_orthogonal(const QuadraticSpace& space, std::mt19937_64& rng, unsigned factors);
FqVector random_anisotropic(const QuadraticSpace& space, std::mt19937_64& rng);

}  // namespace hforge
