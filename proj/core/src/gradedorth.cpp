#include "hforge/gradedorth.hpp"

#include <set>
#include <stdexcept>

namespace hforge {

Mu4Value Mu4Value::parse(const std::string& s) {
  if (s == "1") return one();
  if (s == "i") return i();
  if (s == "-1") return minus_one();
  if (s == "-i") return minus_i();
  throw std::invalid_argument("Mu4Value: cannot parse '" + s + "'");
}

std::string Mu4Value::to_string() const {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[k_];
}

// ---------------------------------------------------------------------------

BlockIndex::BlockIndex(std::vector<BlockOrbit> orbits) : orbits_(std::move(orbits)) {
  std::set<std::string> seen;
  for (const auto& o : orbits_) {
    if (o.label.empty() || o.label[0] == '-') throw std::invalid_argument("BlockIndex: labels must be non-empty and unsigned");
    if (!seen.insert(o.label).second) throw std::invalid_argument("BlockIndex: duplicate label " + o.label);
    if (o.dim == 0) throw std::invalid_argument("BlockIndex: empty orbit " + o.label);
    if (o.kind == OrbitKind::asym && o.dim % 2 != 0) {
      throw std::invalid_argument("BlockIndex: asymmetric orbit " + o.label + " must have even dimension");
    }
    offsets_.push_back(total_);
    total_ += o.dim;
  }
}

std::size_t BlockIndex::orbit_of_coordinate(std::size_t i) const {
  for (std::size_t b = 0; b < orbits_.size(); ++b) {
    if (i < offsets_[b] + orbits_[b].dim) return b;
  }
  throw std::out_of_range("BlockIndex: coordinate out of range");
}

std::vector<std::string> BlockIndex::labels() const {
  std::vector<std::string> out;
  for (const auto& o : orbits_) {
    out.push_back(o.label);
    if (o.kind == OrbitKind::asym) out.push_back("-" + o.label);
  }
  return out;
}

std::string BlockIndex::negate(const std::string& label) const {
  const bool negative = !label.empty() && label[0] == '-';
  const std::string base = negative ? label.substr(1) : label;
  auto b = find_orbit(base);
  if (!b) throw std::invalid_argument("BlockIndex: unknown label " + label);
  if (orbits_[*b].kind == OrbitKind::sym) {
    if (negative) throw std::invalid_argument("BlockIndex: unknown label " + label);
    return label;
  }
  return negative ? base : "-" + base;
}

std::optional<std::size_t> BlockIndex::find_orbit(const std::string& label) const {
  const std::string base = (!label.empty() && label[0] == '-') ? label.substr(1) : label;
  for (std::size_t b = 0; b < orbits_.size(); ++b)
    if (orbits_[b].label == base) return b;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GradedQuadraticSpace::GradedQuadraticSpace(FqContextPtr field, BlockIndex index, FqMatrix gram, std::optional<Mu4Value> root)
    : form_(field, std::move(gram)), index_(std::move(index)), ext_(adjoin_zeta(field)) {
  if (index_.total_dim() != form_.dim()) throw std::invalid_argument("GradedQuadraticSpace: block dimensions do not sum to the form dimension");
  const FqMatrix& g = form_.gram();
  const std::size_t n = form_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (index_.orbit_of_coordinate(i) != index_.orbit_of_coordinate(j) && !g(i, j).is_zero()) {
        throw std::invalid_argument("GradedQuadraticSpace: Gram matrix couples distinct orbits");
      }
    }
  }
  for (std::size_t b = 0; b < index_.orbit_count(); ++b) {
    const std::size_t off = index_.offset(b), d = index_.dim(b);
    if (g.block(off, off, d, d).det().is_zero()) {
      throw std::invalid_argument("GradedQuadraticSpace: orbit block " + index_.orbits()[b].label + " is degenerate");
    }
    if (index_.kind(b) == OrbitKind::asym) {
      // Each label pairs only with its negative.
      const std::size_t h = d / 2;
      if (!g.block(off, off, h, h).is_zero() || !g.block(off + h, off + h, h, h).is_zero()) {
        throw std::invalid_argument("GradedQuadraticSpace: label " + index_.orbits()[b].label + " pairs with itself");
      }
    }
  }
  const bool minus_one_square = sgn(-field->one()).is_plus();
  root_ = root.value_or(minus_one_square ? Mu4Value::one() : Mu4Value::i());
  const Mu4Value expected = minus_one_square ? Mu4Value::one() : Mu4Value::minus_one();
  if (root_ * root_ != expected) throw std::invalid_argument("GradedQuadraticSpace: root must square to sgn(-1)");
}

FqMatrix GradedQuadraticSpace::lift(const FqMatrix& m) const {
  FqMatrix out(*ext_.field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ext_.embedding(m(i, j));
  return out;
}

std::optional<FqMatrix> GradedQuadraticSpace::descend(const FqMatrix& m) const {
  FqMatrix out(*form_.context_ptr(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto pre = ext_.embedding.preimage(m(i, j));
      if (!pre) return std::nullopt;
      out(i, j) = *pre;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::size_t>> glplus_membership(const GradedQuadraticSpace& space, const FqMatrix& g) {
  const std::size_t n = space.dim();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("glplus_membership: dimension mismatch");
  if (!g.context().same_field(*space.extension_field())) throw std::invalid_argument("glplus_membership: matrix must be over f'");
  if (g.det().is_zero()) throw std::invalid_argument("glplus_membership: matrix is singular");
  const BlockIndex& idx = space.index();
  std::vector<std::size_t> perm(idx.orbit_count());
  std::vector<bool> hit(idx.orbit_count(), false);
  for (std::size_t b = 0; b < idx.orbit_count(); ++b) {
    std::optional<std::size_t> target;
    for (std::size_t j = idx.offset(b); j < idx.offset(b) + idx.dim(b); ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (g(i, j).is_zero()) continue;
        const std::size_t c = idx.orbit_of_coordinate(i);
        if (target && *target != c) return std::nullopt;
        target = c;
      }
    }
    if (!target || idx.dim(*target) != idx.dim(b) || idx.kind(*target) != idx.kind(b) || hit[*target]) return std::nullopt;
    hit[*target] = true;
    perm[b] = *target;
  }
  return perm;
}

ExtendedOrthogonalElement zeta_scaling(const GradedQuadraticSpace& space, std::size_t orbit) {
  const BlockIndex& idx = space.index();
  if (orbit >= idx.orbit_count()) throw std::out_of_range("zeta_scaling: no such orbit");
  if (idx.kind(orbit) != OrbitKind::asym) throw std::invalid_argument("zeta_scaling: orbit is symmetric");
  FqMatrix m = FqMatrix::identity(*space.extension_field(), space.dim());
  for (std::size_t j = idx.offset(orbit); j < idx.offset(orbit) + idx.dim(orbit); ++j) m(j, j) = space.zeta();
  std::vector<std::size_t> perm(idx.orbit_count());
  for (std::size_t b = 0; b < perm.size(); ++b) perm[b] = b;
  return {std::move(m), std::move(perm)};
}

ExtendedOrthogonalElement lift_isometry(const GradedQuadraticSpace& space, const OrthogonalMap& h) {
  FqMatrix m = space.lift(h.matrix());
  auto perm = glplus_membership(space, m);
  if (!perm) throw std::invalid_argument("lift_isometry: isometry does not permute the orbit blocks");
  return {std::move(m), std::move(*perm)};
}

std::optional<OtildeDecomposition> otilde_membership(const GradedQuadraticSpace& space, const FqMatrix& g) {
  auto perm = glplus_membership(space, g);
  if (!perm) return std::nullopt;
  const BlockIndex& idx = space.index();
  const FqMatrix gram = space.lift(space.form().gram());
  // g = h a with h an isometry and a block-scalar, so g^T G g = a^T G a is
  // block diagonal with blocks zeta^{2k_b} G_b = (-1)^{k_b} G_b.
  const FqMatrix pulled = g.transpose() * gram * g;
  const std::size_t n = space.dim();
  std::vector<bool> odd(idx.orbit_count(), false);
  for (std::size_t b = 0; b < idx.orbit_count(); ++b) {
    const std::size_t off = idx.offset(b), d = idx.dim(b);
    bool plus = true, minus = true;
    for (std::size_t i = off; i < off + d; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool inside = j >= off && j < off + d;
        const FqElement want = inside ? gram(i, j) : gram.context().zero();
        if (pulled(i, j) != want) plus = false;
        if (pulled(i, j) != -want) minus = false;
      }
    }
    if (plus) continue;
    if (!minus || idx.kind(b) != OrbitKind::asym) return std::nullopt;
    odd[b] = true;
  }
  FqMatrix h = g;
  const FqElement zeta_inv = space.zeta().inv();
  for (std::size_t b = 0; b < idx.orbit_count(); ++b) {
    if (!odd[b]) continue;
    for (std::size_t j = idx.offset(b); j < idx.offset(b) + idx.dim(b); ++j)
      for (std::size_t i = 0; i < n; ++i) h(i, j) *= zeta_inv;
  }
  auto rational = space.descend(h);
  if (!rational) return std::nullopt;
  return OtildeDecomposition{OrthogonalMap(space.form(), std::move(*rational)), std::move(odd), std::move(*perm)};
}

Mu4Value extended_sn(const GradedQuadraticSpace& space, const FqMatrix& g) {
  auto dec = otilde_membership(space, g);
  if (!dec) throw std::domain_error("extended_sn: element is not in the extended orthogonal group");
  Mu4Value v = Mu4Value::from_sign(sgn_spinor(dec->h));
  for (std::size_t b = 0; b < dec->zeta_exponent.size(); ++b) {
    if (dec->zeta_exponent[b]) v = v * space.root().pow(static_cast<int>(space.index().dim(b) / 2));
  }
  return v;
}

std::vector<FqMatrix> generate_group(const std::vector<FqMatrix>& generators, std::size_t limit) {
  if (generators.empty()) return {};
  std::set<FqMatrix> seen;
  std::vector<FqMatrix> out;
  const FqMatrix id = FqMatrix::identity(generators[0].context(), generators[0].rows());
  seen.insert(id);
  out.push_back(id);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : generators) {
      FqMatrix next = out[k] * s;
      if (seen.insert(next).second) {
        if (out.size() >= limit) throw std::length_error("generate_group: group exceeds the size limit");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace hforge
