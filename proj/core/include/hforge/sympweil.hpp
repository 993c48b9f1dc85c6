#pragma once

// Symplectic F_p-spaces, Heisenberg groups, the Schroedinger model of the
// Heisenberg representation, Weil operators and the induction identity for
// parabolic subgroups, all over exact cyclotomic coefficients.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hforge/cyclotomic.hpp"
#include "hforge/ffield.hpp"
#include "hforge/linalg.hpp"

namespace hforge {

/// F_p^{2n} with the standard form <e_i, f_j> = delta_ij in the ordered
/// basis (e_1..e_n, f_1..f_n).
class SymplecticSpace {
 public:
  SymplecticSpace(std::uint64_t p, std::size_t n);

  std::uint64_t p() const { return field_->characteristic(); }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const FqContextPtr& field_ptr() const { return field_; }
  const FqContext& field() const { return *field_; }
  const FqMatrix& form() const { return form_; }

  FqElement pair(const FqVector& u, const FqVector& v) const;
  bool is_symplectic(const FqMatrix& g) const;
  bool is_totally_isotropic(const std::vector<FqVector>& u) const;
  bool operator==(const SymplecticSpace& o) const { return p() == o.p() && n_ == o.n_; }

 private:
  FqContextPtr field_;
  std::size_t n_;
  FqMatrix form_;
};

struct HeisenbergElement {
  FqVector v;
  FqElement a;
};

/// (v, a)(w, b) = (v + w, a + b + <v, w>/2).
HeisenbergElement heisenberg_mul(const SymplecticSpace& V, const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement heisenberg_inv(const SymplecticSpace& V, const HeisenbergElement& x);
/// g . (v, a) = (g v, a).
HeisenbergElement heisenberg_act(const FqMatrix& g, const HeisenbergElement& x);
std::vector<HeisenbergElement> heisenberg_elements(const SymplecticSpace& V);

/// The isomorphism mu_p -> F_p sending zeta_p^root_exponent to 1, where
/// zeta_p = exp(2 pi i / p).
struct CentralCharacterChoice {
  std::uint64_t root_exponent = 1;
};

/// Schroedinger model on functions F_p^n -> Q(zeta_{4p}). Basis vector k is
/// the delta function at the point with coordinates in all_vectors order.
///   rho(x e + y f, a) phi(z) = psi(a + y.z + x.y/2) phi(z + x),
///   psi(a) = iota^{-1}(a).
class HeisenbergRep {
 public:
  explicit HeisenbergRep(SymplecticSpace V, CentralCharacterChoice iota = {});

  const SymplecticSpace& space() const { return V_; }
  const CyclotomicField& coefficients() const { return *cf_; }
  std::size_t dim() const { return dim_; }
  CentralCharacterChoice iota() const { return iota_; }

  Cyclotomic psi(const FqElement& a) const;
  Cyclotomic psi(std::int64_t a) const;

  CycloMatrix matrix(const HeisenbergElement& h) const;
  Cyclotomic character(const HeisenbergElement& h) const;
  /// tr(A rho(h)) without forming rho(h).
  Cyclotomic trace_with(const CycloMatrix& A, const HeisenbergElement& h) const;
  /// A rho(h) and rho(h) A using the monomial structure of rho(h).
  CycloMatrix right_multiply(const CycloMatrix& A, const HeisenbergElement& h) const;
  CycloMatrix left_multiply(const HeisenbergElement& h, const CycloMatrix& A) const;

  std::size_t point_index(const FqVector& z) const;
  FqVector point(std::size_t index) const;

  /// Sum over V# of |chi|^2 divided by |V#|.
  Cyclotomic character_norm() const;

 private:
  // Row z of rho(h) has its single nonzero entry in column `col`.
  struct MonomialRow {
    std::size_t col;
    std::int64_t psi_arg;
  };
  MonomialRow monomial_row(const HeisenbergElement& h, std::size_t z) const;

  SymplecticSpace V_;
  CentralCharacterChoice iota_;
  CyclotomicFieldPtr cf_;
  std::size_t dim_;
  std::vector<FqVector> points_;
};

/// Weil representation of SL_2(F_p) on the n = 1 Schroedinger model.
class WeilSL2 {
 public:
  explicit WeilSL2(const HeisenbergRep& rho);

  const HeisenbergRep& heisenberg() const { return rho_; }
  /// Throws std::invalid_argument unless g is 2x2 over F_p with det 1.
  CycloMatrix operator()(const FqMatrix& g) const;

  CycloMatrix diagonal(const FqElement& t) const;  // diag(t, 1/t)
  CycloMatrix lower(const FqElement& c) const;     // [[1,0],[c,1]]
  CycloMatrix upper(const FqElement& b) const;     // [[1,b],[0,1]]
  const CycloMatrix& weyl() const { return w_; }   // [[0,1],[-1,0]]
  const CycloMatrix& weyl_inverse() const { return w_inv_; }
  /// (1/p) sum_x psi(x^2/2).
  const Cyclotomic& gauss_normalization() const { return gamma_; }

 private:
  HeisenbergRep rho_;
  Cyclotomic gamma_;
  CycloMatrix w_;
  CycloMatrix w_inv_;
};

std::vector<FqMatrix> enumerate_sl2(const FqContext& fp);
FqMatrix random_sl2(const FqContext& fp, std::mt19937_64& rng);
/// Product of random symplectic transvections.
FqMatrix random_symplectic(const SymplecticSpace& V, std::mt19937_64& rng, unsigned factors = 12);

/// Intertwiner T with T rho(v, a) T^{-1} = rho(g v, a), scaled so that its
/// first nonzero entry in row-major order is 1.
CycloMatrix projective_weil(const HeisenbergRep& rho, const FqMatrix& g);

/// c with T(g) T(h) = c T(gh), or nullopt when the ratio is not scalar.
std::optional<Cyclotomic> weil_cocycle(const HeisenbergRep& rho, const FqMatrix& g, const FqMatrix& h);

/// A rho(v, a) == rho(g v, a) A.
bool intertwines(const HeisenbergRep& rho, const CycloMatrix& A, const FqMatrix& g, const HeisenbergElement& h);

/// sgn det(g restricted to U); throws unless g U = U and U is totally isotropic.
SignValue det_sign_character(const SymplecticSpace& V, const FqMatrix& g, const std::vector<FqVector>& U);

struct IsotropicReduction {
  std::vector<FqVector> isotropic;  // basis of U
  std::vector<FqVector> perp;       // basis of U-perp
  /// Lifts e'_1..e'_m, f'_1..f'_m in U-perp of a symplectic basis of U-perp/U.
  std::vector<FqVector> quotient_basis;
  /// Induced form on U-perp/U in the chosen basis.
  FqMatrix quotient_form;
  std::size_t quotient_dim() const { return quotient_basis.size(); }
  /// Coordinates of w in U-perp with respect to quotient_basis modulo U.
  FqVector quotient_coordinates(const FqVector& w) const;
};

IsotropicReduction isotropic_reduction(const SymplecticSpace& V, const std::vector<FqVector>& U);

/// V_1 + V_2 + V_3 for negative, zero and positive weights of basis lines of
/// a general alternating form.
struct GradedSplit {
  std::vector<FqVector> negative;
  std::vector<FqVector> zero;
  std::vector<FqVector> positive;
};

GradedSplit graded_symplectic_split(const FqMatrix& form, const std::vector<double>& weights);

struct WeightedForm {
  FqMatrix form;
  std::vector<double> weights;
};

/// Nondegenerate alternating form on F_p^dim (dim even) with random weights
/// in {-2, -1, 0, 1, 2}, pairing only opposite weights, in shuffled basis order.
WeightedForm random_weighted_form(const FqContext& fp, std::size_t dim, std::mt19937_64& rng);

/// Empty when all postconditions hold, otherwise a description of the first
/// violated one.
std::optional<std::string> check_graded_split(const FqMatrix& form, const GradedSplit& split);

enum class InductionMode { heisenberg_only, with_sl2_levi };

struct InductionResult {
  bool equal = false;
  std::size_t group_order = 0;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  std::vector<Cyclotomic> lhs;  // character values, group enumeration order
  std::vector<Cyclotomic> rhs;
};

/// Compares the restriction of the Heisenberg (or Heisenberg-Weil)
/// representation with the representation induced from the U-perp side.
/// heisenberg_only: any totally isotropic U, group V#.
/// with_sl2_levi: dim V = 2, group P x| V# for P the stabiliser of U in
/// SL_2, induced from P x| (U-perp)# with the det-sign twist when
/// include_twist is set.
InductionResult induction_identity_check(const HeisenbergRep& rho, const std::vector<FqVector>& U, InductionMode mode,
                                         bool include_twist = true);

}  // namespace hforge
