#include "hforge/quadspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hforge {

SquareClass operator*(SquareClass a, SquareClass b) {
  return a == b ? SquareClass::trivial : SquareClass::nonsquare;
}

SquareClass square_class_of(const FqElement& a) {
  return sgn(a).is_plus() ? SquareClass::trivial : SquareClass::nonsquare;
}

SignValue sgn(SquareClass c) { return c == SquareClass::trivial ? SignValue::plus() : SignValue::minus(); }

const char* to_string(SquareClass c) { return c == SquareClass::trivial ? "trivial" : "nonsquare"; }

// ---------------------------------------------------------------------------

QuadraticSpace::QuadraticSpace(FqContextPtr ctx, FqMatrix gram) : ctx_(std::move(ctx)), gram_(std::move(gram)) {
  if (!ctx_) throw std::invalid_argument("QuadraticSpace: null field context");
  if (gram_.rows() == 0 || !gram_.square()) throw std::invalid_argument("QuadraticSpace: Gram matrix must be square and non-empty");
  if (!gram_.context().same_field(*ctx_)) throw std::invalid_argument("QuadraticSpace: context mismatch");
  if (!gram_.is_symmetric()) throw std::invalid_argument("QuadraticSpace: Gram matrix not symmetric");
  if (gram_.det().is_zero()) throw std::invalid_argument("QuadraticSpace: form is degenerate");
}

FqElement QuadraticSpace::bilinear(const FqVector& u, const FqVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw std::invalid_argument("QuadraticSpace: dimension mismatch");
  return hforge::bilinear(gram_, u, v);
}

FqElement QuadraticSpace::evaluate_form(const FqVector& v) const {
  return bilinear(v, v) / ctx_->from_int(2);
}

bool QuadraticSpace::is_orthogonal(const FqMatrix& m) const {
  return m.rows() == dim() && m.cols() == dim() && m.transpose() * gram_ * m == gram_;
}

bool QuadraticSpace::operator==(const QuadraticSpace& o) const {
  return ctx_->same_field(*o.ctx_) && gram_ == o.gram_;
}

OrthogonalMap::OrthogonalMap(const QuadraticSpace& space, FqMatrix matrix) : space_(space), matrix_(std::move(matrix)) {
  if (!space_.is_orthogonal(matrix_)) throw std::invalid_argument("OrthogonalMap: matrix does not preserve the form");
}

OrthogonalMap OrthogonalMap::identity(const QuadraticSpace& space) {
  return OrthogonalMap(space, FqMatrix::identity(space.context(), space.dim()));
}

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("OrthogonalMap: maps on different spaces");
  return OrthogonalMap(space_, matrix_ * o.matrix_);
}

OrthogonalMap OrthogonalMap::inverse() const {
  // g^{-1} = G^{-1} g^T G
  auto gi = space_.gram().inverse();
  return OrthogonalMap(space_, *gi * matrix_.transpose() * space_.gram());
}

// ---------------------------------------------------------------------------

namespace {

FqMatrix reflection_matrix(const QuadraticSpace& space, const FqVector& v) {
  const FqElement phi = space.evaluate_form(v);
  if (phi.is_zero()) throw std::domain_error("reflection: vector is isotropic");
  const std::size_t n = space.dim();
  // r(w) = w - (B(w, v) / phi(v)) v ; B(w, v) = (G v) . w
  const FqVector gv = space.gram() * v;
  const FqElement inv_phi = phi.inv();
  FqMatrix r = FqMatrix::identity(space.context(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= v[i] * gv[j] * inv_phi;
  return r;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// Candidate vectors for the factorisation search, in a deterministic order.
std::vector<FqVector> candidates(const FqContext& ctx, std::size_t n, const FactorizationStrategy& strategy) {
  std::vector<FqVector> out;
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < n; ++i) {
    total *= ctx.order();
    if (total > 4096) {
      small = false;
      break;
    }
  }
  if (small) {
    out = all_vectors(ctx, n);
    out.erase(out.begin());  // zero
  } else {
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(ctx, n, i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (const auto& c : ctx.nonzero_elements()) {
          auto v = unit_vector(ctx, n, i);
          v[j] = c;
          out.push_back(std::move(v));
        }
    std::mt19937_64 rng(0x5eed);
    for (int k = 0; k < 2048; ++k) {
      FqVector v(n, ctx.zero());
      for (auto& e : v) e = ctx.from_index(draw(rng, ctx.order()));
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  }
  switch (strategy.order) {
    case FactorizationStrategy::Order::forward:
      break;
    case FactorizationStrategy::Order::reverse:
      std::reverse(out.begin(), out.end());
      break;
    case FactorizationStrategy::Order::seeded: {
      std::mt19937_64 rng(strategy.seed);
      for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[draw(rng, i)]);
      break;
    }
  }
  return out;
}

}  // namespace

OrthogonalMap reflection(const QuadraticSpace& space, const FqVector& v) {
  if (v.size() != space.dim()) throw std::invalid_argument("reflection: dimension mismatch");
  return OrthogonalMap(space, reflection_matrix(space, v));
}

std::vector<FqVector> factor_into_reflections(const OrthogonalMap& g, FactorizationStrategy strategy) {
  const QuadraticSpace& space = g.space();
  const FqContext& ctx = space.context();
  const std::size_t n = space.dim();
  std::vector<FqVector> out;
  FqMatrix m = g.matrix();
  if (m.is_identity()) return out;
  const auto cands = candidates(ctx, n, strategy);

  // Fix an orthogonal basis one anisotropic vector at a time. For v
  // orthogonal to the vectors already fixed, r_{mv - v} or r_v r_{mv + v}
  // sends mv back to v; phi(mv - v) + phi(mv + v) = 4 phi(v), so one of the
  // two is anisotropic.
  std::vector<FqVector> fixed;
  while (fixed.size() < n && !m.is_identity()) {
    const FqVector* v = nullptr;
    for (const auto& x : cands) {
      if (space.evaluate_form(x).is_zero()) continue;
      bool perp = true;
      for (const auto& f : fixed) perp = perp && space.bilinear(f, x).is_zero();
      if (perp) {
        v = &x;
        break;
      }
    }
    FqVector chosen;
    if (v) {
      chosen = *v;
    } else {
      // The complement is nondegenerate: some basis vector or sum of two basis
      // vectors is anisotropic.
      const auto comp = orthogonal_complement(space.gram(), fixed);
      for (std::size_t i = 0; i < comp.size() && chosen.empty(); ++i) {
        if (!space.evaluate_form(comp[i]).is_zero()) chosen = comp[i];
        for (std::size_t j = i + 1; j < comp.size() && chosen.empty(); ++j)
          if (!space.evaluate_form(add(comp[i], comp[j])).is_zero()) chosen = add(comp[i], comp[j]);
      }
      if (chosen.empty()) throw std::logic_error("factor_into_reflections: no anisotropic vector in the complement");
    }
    v = &chosen;
    const FqVector mv = m * *v;
    FqVector u = sub(mv, *v);
    if (!is_zero(u)) {
      if (!space.evaluate_form(u).is_zero()) {
        m = reflection_matrix(space, u) * m;
        out.push_back(std::move(u));
      } else {
        u = add(mv, *v);
        m = reflection_matrix(space, *v) * reflection_matrix(space, u) * m;
        out.push_back(std::move(u));
        out.push_back(*v);
      }
    }
    fixed.push_back(*v);
  }
  if (!m.is_identity()) throw std::logic_error("factor_into_reflections: did not terminate");
  return out;
}

SquareClass spinor_norm(const OrthogonalMap& g, FactorizationStrategy strategy) {
  SquareClass c = SquareClass::trivial;
  for (const auto& v : factor_into_reflections(g, strategy)) c = c * square_class_of(g.space().evaluate_form(v));
  return c;
}

SignValue sgn_spinor(const OrthogonalMap& g) { return sgn(spinor_norm(g)); }

OrthogonalMap OrthogonalSum::embed(const OrthogonalMap& g1, const OrthogonalMap& g2) const {
  const std::size_t n = space.dim();
  if (g1.matrix().rows() != split || g2.matrix().rows() != n - split) {
    throw std::invalid_argument("OrthogonalSum: block dimension mismatch");
  }
  FqMatrix m(space.context(), n, n);
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < split; ++j) m(i, j) = g1.matrix()(i, j);
  for (std::size_t i = split; i < n; ++i)
    for (std::size_t j = split; j < n; ++j) m(i, j) = g2.matrix()(i - split, j - split);
  return OrthogonalMap(space, std::move(m));
}

OrthogonalSum orthogonal_sum(const QuadraticSpace& v1, const QuadraticSpace& v2) {
  if (!v1.context().same_field(v2.context())) throw std::invalid_argument("orthogonal_sum: context mismatch");
  const std::size_t a = v1.dim(), b = v2.dim();
  FqMatrix g(v1.context(), a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) g(i, j) = v1.gram()(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) g(a + i, a + j) = v2.gram()(i, j);
  return OrthogonalSum{QuadraticSpace(v1.context_ptr(), std::move(g)), a};
}

std::vector<OrthogonalMap> enumerate_orthogonal_group(const QuadraticSpace& space) {
  const FqContext& ctx = space.context();
  const std::size_t n = space.dim();
  const auto vecs = all_vectors(ctx, n);
  const FqMatrix& gram = space.gram();
  std::vector<OrthogonalMap> out;
  std::vector<const FqVector*> cols(n, nullptr);
  std::vector<FqVector> gcols(n);  // G * col

  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      std::vector<FqVector> c;
      for (auto* p : cols) c.push_back(*p);
      out.emplace_back(space, FqMatrix::from_columns(c));
      return;
    }
    for (const auto& v : vecs) {
      const FqVector gv = gram * v;
      if (dot(v, gv) != gram(j, j)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = dot(*cols[i], gv) == gram(i, j);
      if (!ok) continue;
      cols[j] = &v;
      gcols[j] = gv;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

FqVector random_anisotropic(const QuadraticSpace& space, std::mt19937_64& rng) {
  const FqContext& ctx = space.context();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    FqVector v(space.dim(), ctx.zero());
    for (auto& e : v) e = ctx.from_index(draw(rng, ctx.order()));
    if (!space.evaluate_form(v).is_zero()) return v;
  }
  throw std::logic_error("random_anisotropic: no anisotropic vector found");
}

OrthogonalMap random_orthogonal(const QuadraticSpace& space, std::mt19937_64& rng, unsigned factors) {
  FqMatrix m = FqMatrix::identity(space.context(), space.dim());
  for (unsigned k = 0; k < factors; ++k) m = m * reflection_matrix(space, random_anisotropic(space, rng));
  return OrthogonalMap(space, std::move(m));
}

}  // namespace hforge
