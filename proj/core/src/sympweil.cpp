#include "hforge/sympweil.hpp"

#include <algorithm>
#include <stdexcept>

namespace hforge {

namespace {

std::int64_t as_int(const FqElement& a) { return static_cast<std::int64_t>(a.index()); }

FqMatrix standard_form(const FqContext& f, std::size_t n) {
  FqMatrix j(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = f.one();
    j(n + i, i) = -f.one();
  }
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

SymplecticSpace::SymplecticSpace(std::uint64_t p, std::size_t n) : field_(FqContext::make(p, 1)), n_(n) {
  if (p == 2) throw std::invalid_argument("SymplecticSpace: p must be odd");
  if (n == 0) throw std::invalid_argument("SymplecticSpace: dimension must be positive");
  form_ = standard_form(*field_, n);
}

FqElement SymplecticSpace::pair(const FqVector& u, const FqVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw std::invalid_argument("SymplecticSpace: dimension mismatch");
  return bilinear(form_, u, v);
}

bool SymplecticSpace::is_symplectic(const FqMatrix& g) const {
  return g.rows() == dim() && g.cols() == dim() && g.context().same_field(*field_) && g.transpose() * form_ * g == form_;
}

bool SymplecticSpace::is_totally_isotropic(const std::vector<FqVector>& u) const {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!pair(u[i], u[j]).is_zero()) return false;
  return true;
}

HeisenbergElement heisenberg_mul(const SymplecticSpace& V, const HeisenbergElement& x, const HeisenbergElement& y) {
  const FqElement half = V.field().from_int(2).inv();
  return {add(x.v, y.v), x.a + y.a + V.pair(x.v, y.v) * half};
}

HeisenbergElement heisenberg_inv(const SymplecticSpace& V, const HeisenbergElement& x) {
  return {scale(-V.field().one(), x.v), -x.a};
}

HeisenbergElement heisenberg_act(const FqMatrix& g, const HeisenbergElement& x) { return {g * x.v, x.a}; }

std::vector<HeisenbergElement> heisenberg_elements(const SymplecticSpace& V) {
  std::vector<HeisenbergElement> out;
  const auto vs = all_vectors(V.field(), V.dim());
  for (const auto& v : vs)
    for (const auto& a : V.field().elements()) out.push_back({v, a});
  return out;
}

// ---------------------------------------------------------------------------

HeisenbergRep::HeisenbergRep(SymplecticSpace V, CentralCharacterChoice iota)
    : V_(std::move(V)), iota_(iota), cf_(CyclotomicField::make(static_cast<std::uint32_t>(4 * V_.p()))) {
  if (iota_.root_exponent % V_.p() == 0) throw std::invalid_argument("HeisenbergRep: central character must be nontrivial");
  points_ = all_vectors(V_.field(), V_.n());
  dim_ = points_.size();
}

Cyclotomic HeisenbergRep::psi(std::int64_t a) const {
  const std::int64_t p = static_cast<std::int64_t>(V_.p());
  const std::int64_t k = static_cast<std::int64_t>(iota_.root_exponent % V_.p());
  const std::int64_t e = (((a % p) + p) % p) * k % p;
  return Cyclotomic::zeta(*cf_, 4 * e);
}

Cyclotomic HeisenbergRep::psi(const FqElement& a) const { return psi(as_int(a)); }

std::size_t HeisenbergRep::point_index(const FqVector& z) const {
  std::size_t idx = 0;
  for (const auto& c : z) idx = idx * V_.p() + c.index();
  return idx;
}

FqVector HeisenbergRep::point(std::size_t index) const { return points_.at(index); }

HeisenbergRep::MonomialRow HeisenbergRep::monomial_row(const HeisenbergElement& h, std::size_t zi) const {
  const std::size_t n = V_.n();
  if (h.v.size() != 2 * n) throw std::invalid_argument("HeisenbergRep: element of the wrong space");
  const std::int64_t p = static_cast<std::int64_t>(V_.p());
  const std::int64_t half = (p + 1) / 2;
  const FqVector& z = points_[zi];
  std::int64_t arg = as_int(h.a);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t x = as_int(h.v[i]), y = as_int(h.v[n + i]), zz = as_int(z[i]);
    arg = (arg + y * zz + half * (x * y % p)) % p;
    col = col * V_.p() + static_cast<std::size_t>((zz + x) % p);
  }
  return {col, arg};
}

CycloMatrix HeisenbergRep::matrix(const HeisenbergElement& h) const {
  CycloMatrix m(*cf_, dim_);
  for (std::size_t z = 0; z < dim_; ++z) {
    const auto r = monomial_row(h, z);
    m(z, r.col) = psi(r.psi_arg);
  }
  return m;
}

Cyclotomic HeisenbergRep::character(const HeisenbergElement& h) const {
  Cyclotomic t = Cyclotomic::zero(*cf_);
  for (std::size_t z = 0; z < dim_; ++z) {
    const auto r = monomial_row(h, z);
    if (r.col == z) t += psi(r.psi_arg);
  }
  return t;
}

Cyclotomic HeisenbergRep::trace_with(const CycloMatrix& A, const HeisenbergElement& h) const {
  // tr(A rho) = sum_k A(col_k, k) rho(k, col_k)... indexed by rows of rho.
  Cyclotomic t = Cyclotomic::zero(*cf_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto r = monomial_row(h, k);
    const Cyclotomic& a = A(r.col, k);
    if (!a.is_zero()) t += a * psi(r.psi_arg);
  }
  return t;
}

CycloMatrix HeisenbergRep::right_multiply(const CycloMatrix& A, const HeisenbergElement& h) const {
  CycloMatrix out(*cf_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto r = monomial_row(h, k);
    const Cyclotomic c = psi(r.psi_arg);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!A(i, k).is_zero()) out(i, r.col) = A(i, k) * c;
  }
  return out;
}

CycloMatrix HeisenbergRep::left_multiply(const HeisenbergElement& h, const CycloMatrix& A) const {
  CycloMatrix out(*cf_, dim_);
  for (std::size_t z = 0; z < dim_; ++z) {
    const auto r = monomial_row(h, z);
    const Cyclotomic c = psi(r.psi_arg);
    for (std::size_t j = 0; j < dim_; ++j)
      if (!A(r.col, j).is_zero()) out(z, j) = c * A(r.col, j);
  }
  return out;
}

Cyclotomic HeisenbergRep::character_norm() const {
  Cyclotomic s = Cyclotomic::zero(*cf_);
  std::int64_t order = 0;
  for (const auto& h : heisenberg_elements(V_)) {
    const Cyclotomic c = character(h);
    if (!c.is_zero()) s += c.abs2();
    ++order;
  }
  return s.scaled(1, order);
}

// ---------------------------------------------------------------------------

WeilSL2::WeilSL2(const HeisenbergRep& rho) : rho_(rho) {
  if (rho_.space().n() != 1) throw std::invalid_argument("WeilSL2: requires a two-dimensional symplectic space");
  const CyclotomicField& cf = rho_.coefficients();
  const FqContext& f = rho_.space().field();
  const std::int64_t p = static_cast<std::int64_t>(f.characteristic());
  const FqElement half = f.from_int(2).inv();
  gamma_ = Cyclotomic::zero(cf);
  for (const auto& x : f.elements()) gamma_ += rho_.psi(x * x * half);
  gamma_ = gamma_.scaled(1, p);
  // |gamma|^2 = 1/p, so gamma^{-1}/p = conj(gamma).
  const Cyclotomic gamma_bar = gamma_.conj();
  w_ = CycloMatrix(cf, rho_.dim());
  w_inv_ = CycloMatrix(cf, rho_.dim());
  for (const auto& z : f.elements()) {
    for (const auto& u : f.elements()) {
      w_(z.index(), u.index()) = gamma_ * rho_.psi(u * z);
      w_inv_(z.index(), u.index()) = gamma_bar * rho_.psi(-(u * z));
    }
  }
}

CycloMatrix WeilSL2::diagonal(const FqElement& t) const {
  if (t.is_zero()) throw std::invalid_argument("WeilSL2: diagonal entry must be nonzero");
  const CyclotomicField& cf = rho_.coefficients();
  const Cyclotomic s = Cyclotomic::rational(cf, sgn(t).value());
  const FqElement ti = t.inv();
  CycloMatrix m(cf, rho_.dim());
  for (const auto& z : rho_.space().field().elements()) m(z.index(), (z * ti).index()) = s;
  return m;
}

CycloMatrix WeilSL2::lower(const FqElement& c) const {
  const FqElement half = rho_.space().field().from_int(2).inv();
  CycloMatrix m(rho_.coefficients(), rho_.dim());
  for (const auto& z : rho_.space().field().elements()) m(z.index(), z.index()) = rho_.psi(-(c * z * z * half));
  return m;
}

CycloMatrix WeilSL2::upper(const FqElement& b) const {
  // u(b) = w l(-b) w^{-1}
  return w_ * lower(-b) * w_inv_;
}

CycloMatrix WeilSL2::operator()(const FqMatrix& g) const {
  const FqContext& f = rho_.space().field();
  if (g.rows() != 2 || g.cols() != 2 || !g.context().same_field(f)) throw std::invalid_argument("WeilSL2: expected a 2x2 matrix over F_p");
  if (!g.det().is_one()) throw std::invalid_argument("WeilSL2: determinant must be 1");
  const FqElement a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  if (c.is_zero()) return diagonal(a) * upper(b / a);
  // g = u(a/c) h(-1/c) w u(d/c)
  const FqElement ci = c.inv();
  return upper(a * ci) * diagonal(-ci) * w_ * upper(d * ci);
}

// ---------------------------------------------------------------------------

std::vector<FqMatrix> enumerate_sl2(const FqContext& fp) {
  std::vector<FqMatrix> out;
  const auto els = fp.elements();
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els)
        for (const auto& d : els) {
          if (!(a * d - b * c).is_one()) continue;
          FqMatrix m(fp, 2, 2);
          m(0, 0) = a;
          m(0, 1) = b;
          m(1, 0) = c;
          m(1, 1) = d;
          out.push_back(std::move(m));
        }
  return out;
}

FqMatrix random_sl2(const FqContext& fp, std::mt19937_64& rng) {
  const std::uint64_t q = fp.order();
  for (;;) {
    FqMatrix m(fp, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = fp.from_index(rng() % q);
    if (m.det().is_one()) return m;
  }
}

FqMatrix random_symplectic(const SymplecticSpace& V, std::mt19937_64& rng, unsigned factors) {
  const FqContext& f = V.field();
  const std::size_t n = V.dim();
  FqMatrix g = FqMatrix::identity(f, n);
  for (unsigned k = 0; k < factors; ++k) {
    FqVector u(n, f.zero());
    for (auto& c : u) c = f.from_index(rng() % f.order());
    const FqElement lambda = f.from_index(1 + rng() % (f.order() - 1));
    // x -> x + lambda <x, u> u
    const FqVector ju = V.form() * u;
    FqMatrix t = FqMatrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) -= lambda * u[i] * ju[j];
    g = g * t;
  }
  return g;
}

CycloMatrix projective_weil(const HeisenbergRep& rho, const FqMatrix& g) {
  const SymplecticSpace& V = rho.space();
  if (!V.is_symplectic(g)) throw std::invalid_argument("projective_weil: matrix is not symplectic");
  const std::size_t d = rho.dim();
  const std::size_t n = V.n();
  const std::int64_t p = static_cast<std::int64_t>(V.p());
  const std::int64_t half = (p + 1) / 2;
  const auto vs = all_vectors(V.field(), V.dim());
  const CyclotomicField& cf = rho.coefficients();

  // T = sum_v rho(gv, 0) E_ij rho(-v, 0). Each summand has one nonzero entry,
  // so accumulate exponent counts of psi per position.
  auto coord = [](const FqVector& v, std::size_t i) { return static_cast<std::int64_t>(v[i].index()); };
  auto shift = [&](std::size_t base, const FqVector& v, std::int64_t sign) {
    const FqVector pt = rho.point(base);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * V.p() + static_cast<std::size_t>(((coord(pt, i) + sign * coord(v, i)) % p + p) % p);
    return idx;
  };
  // psi argument of row z of rho(v, 0): y.z + x.y/2
  auto row_arg = [&](const FqVector& v, std::size_t zi) {
    const FqVector z = rho.point(zi);
    std::int64_t arg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t x = coord(v, i), y = coord(v, n + i);
      arg = (arg + y * coord(z, i) + half * (x * y % p)) % p;
    }
    return arg;
  };

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<std::int64_t> counts(d * d * static_cast<std::size_t>(p), 0);
      for (const auto& v : vs) {
        const FqVector gv = g * v;
        const FqVector mv = scale(-V.field().one(), v);
        const std::size_t r = shift(i, gv, -1);  // rho(gv) e_i lands in row r
        const std::size_t s = shift(j, mv, 1);   // row j of rho(-v) sits in column s
        const std::int64_t arg = (row_arg(gv, r) + row_arg(mv, j)) % p;
        ++counts[(r * d + s) * static_cast<std::size_t>(p) + static_cast<std::size_t>(arg)];
      }
      CycloMatrix t(cf, d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
          Cyclotomic acc = Cyclotomic::zero(cf);
          for (std::int64_t a = 0; a < p; ++a) {
            const std::int64_t c = counts[(r * d + s) * static_cast<std::size_t>(p) + static_cast<std::size_t>(a)];
            if (c) acc += rho.psi(a).scaled(c);
          }
          t(r, s) = acc;
        }
      }
      if (t.is_zero()) continue;
      for (std::size_t k = 0; k < d * d; ++k) {
        const Cyclotomic& lead = t(k / d, k % d);
        if (!lead.is_zero()) return t.scaled(lead.inv());
      }
    }
  }
  throw std::logic_error("projective_weil: no nonzero intertwiner found");
}

std::optional<Cyclotomic> weil_cocycle(const HeisenbergRep& rho, const FqMatrix& g, const FqMatrix& h) {
  const CycloMatrix prod = projective_weil(rho, g) * projective_weil(rho, h);
  const CycloMatrix tgh = projective_weil(rho, g * h);
  const std::size_t d = rho.dim();
  for (std::size_t k = 0; k < d * d; ++k) {
    if (tgh(k / d, k % d).is_zero()) continue;
    // tgh is normalised: its leading entry is 1.
    const Cyclotomic c = prod(k / d, k % d);
    if (prod == tgh.scaled(c)) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

bool intertwines(const HeisenbergRep& rho, const CycloMatrix& A, const FqMatrix& g, const HeisenbergElement& h) {
  return rho.right_multiply(A, h) == rho.left_multiply(heisenberg_act(g, h), A);
}

// ---------------------------------------------------------------------------

SignValue det_sign_character(const SymplecticSpace& V, const FqMatrix& g, const std::vector<FqVector>& U) {
  if (!V.is_symplectic(g)) throw std::invalid_argument("det_sign_character: matrix is not symplectic");
  const auto basis = span_basis(V.field(), V.dim(), U);
  if (!V.is_totally_isotropic(basis)) throw std::invalid_argument("det_sign_character: subspace is not totally isotropic");
  if (basis.empty()) return SignValue::plus();
  const FqMatrix cols = FqMatrix::from_columns(basis);
  FqMatrix restricted(V.field(), basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto c = cols.solve(g * basis[j]);
    if (!c) throw std::invalid_argument("det_sign_character: matrix does not stabilise the subspace");
    for (std::size_t i = 0; i < basis.size(); ++i) restricted(i, j) = (*c)[i];
  }
  return sgn(restricted.det());
}

FqVector IsotropicReduction::quotient_coordinates(const FqVector& w) const {
  if (w.empty()) throw std::invalid_argument("quotient_coordinates: empty vector");
  if (quotient_basis.empty()) {
    if (!in_span(w[0].context(), w.size(), isotropic, w)) {
      throw std::invalid_argument("quotient_coordinates: vector is not in U-perp");
    }
    return {};
  }
  std::vector<FqVector> cols = isotropic;
  cols.insert(cols.end(), quotient_basis.begin(), quotient_basis.end());
  auto c = FqMatrix::from_columns(cols).solve(w);
  if (!c) throw std::invalid_argument("quotient_coordinates: vector is not in U-perp");
  return FqVector(c->begin() + static_cast<std::ptrdiff_t>(isotropic.size()), c->end());
}

IsotropicReduction isotropic_reduction(const SymplecticSpace& V, const std::vector<FqVector>& U) {
  const FqContext& f = V.field();
  const std::size_t n = V.dim();
  IsotropicReduction out;
  out.isotropic = span_basis(f, n, U);
  if (!V.is_totally_isotropic(out.isotropic)) throw std::invalid_argument("isotropic_reduction: subspace is not totally isotropic");
  out.perp = orthogonal_complement(V.form(), out.isotropic);

  std::vector<FqVector> rest;
  if (out.isotropic.empty()) {
    for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vector(f, n, i));
  } else {
    std::vector<FqVector> acc = out.isotropic;
    for (const auto& w : out.perp) {
      if (in_span(f, n, acc, w)) continue;
      acc.push_back(w);
      rest.push_back(w);
    }
  }

  // Symplectic Gram-Schmidt on the complement of U inside U-perp.
  std::vector<FqVector> es, fs;
  if (out.isotropic.empty()) {
    // Keep the standard basis for U = 0.
    for (std::size_t i = 0; i < V.n(); ++i) {
      es.push_back(rest[i]);
      fs.push_back(rest[V.n() + i]);
    }
  } else {
    while (!rest.empty()) {
      FqVector e = rest.front();
      rest.erase(rest.begin());
      auto partner = rest.end();
      for (auto it = rest.begin(); it != rest.end(); ++it)
        if (!V.pair(e, *it).is_zero()) {
          partner = it;
          break;
        }
      if (partner == rest.end()) throw std::logic_error("isotropic_reduction: induced form is degenerate");
      FqVector fv = scale(V.pair(e, *partner).inv(), *partner);
      rest.erase(partner);
      for (auto& x : rest) x = add(sub(x, scale(V.pair(x, fv), e)), scale(V.pair(x, e), fv));
      es.push_back(std::move(e));
      fs.push_back(std::move(fv));
    }
  }
  out.quotient_basis = es;
  out.quotient_basis.insert(out.quotient_basis.end(), fs.begin(), fs.end());
  const std::size_t m = out.quotient_basis.size();
  out.quotient_form = FqMatrix(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.quotient_form(i, j) = V.pair(out.quotient_basis[i], out.quotient_basis[j]);
  return out;
}

// ---------------------------------------------------------------------------

GradedSplit graded_symplectic_split(const FqMatrix& form, const std::vector<double>& weights) {
  const std::size_t n = form.rows();
  if (!form.square() || !form.is_alternating()) throw std::invalid_argument("graded_symplectic_split: form is not alternating");
  if (form.det().is_zero()) throw std::invalid_argument("graded_symplectic_split: form is degenerate");
  if (weights.size() != n) throw std::invalid_argument("graded_symplectic_split: one weight per basis line required");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!form(i, j).is_zero() && weights[i] != -weights[j]) {
        throw std::invalid_argument("graded_symplectic_split: pairing between weights that are not opposite");
      }
  GradedSplit out;
  const FqContext& f = form.context();
  for (std::size_t i = 0; i < n; ++i) {
    auto e = unit_vector(f, n, i);
    if (weights[i] < 0)
      out.negative.push_back(std::move(e));
    else if (weights[i] > 0)
      out.positive.push_back(std::move(e));
    else
      out.zero.push_back(std::move(e));
  }
  return out;
}

WeightedForm random_weighted_form(const FqContext& fp, std::size_t dim, std::mt19937_64& rng) {
  if (dim % 2 != 0) throw std::invalid_argument("random_weighted_form: dimension must be even");
  auto random_invertible = [&](std::size_t k) {
    for (;;) {
      FqMatrix m(fp, k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = fp.from_index(rng() % fp.order());
      if (!m.det().is_zero()) return m;
    }
  };
  // Lines in block order: for each magnitude, k positive then k negative;
  // afterwards the weight-zero lines.
  const std::size_t pairs = rng() % (dim / 2 + 1);
  std::vector<std::size_t> per_mag(2, 0);
  for (std::size_t k = 0; k < pairs; ++k) ++per_mag[rng() % 2];
  std::vector<double> w;
  FqMatrix form(fp, dim, dim);
  std::size_t pos = 0;
  for (std::size_t m = 0; m < 2; ++m) {
    const std::size_t k = per_mag[m];
    if (k == 0) continue;
    const FqMatrix a = random_invertible(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        form(pos + i, pos + k + j) = a(i, j);
        form(pos + k + j, pos + i) = -a(i, j);
      }
    for (std::size_t i = 0; i < k; ++i) w.push_back(static_cast<double>(m + 1));
    for (std::size_t i = 0; i < k; ++i) w.push_back(-static_cast<double>(m + 1));
    pos += 2 * k;
  }
  const std::size_t z = dim - pos;
  if (z > 0) {
    FqMatrix j(fp, z, z);
    for (std::size_t i = 0; i < z / 2; ++i) {
      j(i, z / 2 + i) = fp.one();
      j(z / 2 + i, i) = -fp.one();
    }
    const FqMatrix m = random_invertible(z);
    const FqMatrix b = m.transpose() * j * m;
    for (std::size_t r = 0; r < z; ++r)
      for (std::size_t c = 0; c < z; ++c) form(pos + r, pos + c) = b(r, c);
    for (std::size_t i = 0; i < z; ++i) w.push_back(0.0);
  }
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  WeightedForm out{FqMatrix(fp, dim, dim), std::vector<double>(dim)};
  for (std::size_t r = 0; r < dim; ++r) {
    out.weights[r] = w[perm[r]];
    for (std::size_t c = 0; c < dim; ++c) out.form(r, c) = form(perm[r], perm[c]);
  }
  return out;
}

std::optional<std::string> check_graded_split(const FqMatrix& form, const GradedSplit& split) {
  const FqContext& f = form.context();
  const std::size_t n = form.rows();
  auto pairs_to_zero = [&](const std::vector<FqVector>& a, const std::vector<FqVector>& b) {
    for (const auto& x : a)
      for (const auto& y : b)
        if (!bilinear(form, x, y).is_zero()) return false;
    return true;
  };
  if (!pairs_to_zero(split.negative, split.negative)) return "V1 is not totally isotropic";
  if (!pairs_to_zero(split.positive, split.positive)) return "V3 is not totally isotropic";
  if (!pairs_to_zero(split.zero, split.negative) || !pairs_to_zero(split.zero, split.positive)) return "V2 is not orthogonal to V1 + V3";
  const std::size_t d1 = subspace_dim(f, n, split.negative), d2 = subspace_dim(f, n, split.zero),
                    d3 = subspace_dim(f, n, split.positive);
  if (d1 != d3) return "dim V1 != dim V3";
  if (d1 + d2 + d3 != n) return "V1 + V2 + V3 is not all of V";
  std::vector<FqVector> v12 = split.negative;
  v12.insert(v12.end(), split.zero.begin(), split.zero.end());
  if (!same_subspace(f, n, orthogonal_complement(form, split.negative), v12)) return "V1-perp != V1 + V2";
  if (!split.zero.empty()) {
    FqMatrix g(f, split.zero.size(), split.zero.size());
    for (std::size_t i = 0; i < split.zero.size(); ++i)
      for (std::size_t j = 0; j < split.zero.size(); ++j) g(i, j) = bilinear(form, split.zero[i], split.zero[j]);
    if (g.det().is_zero()) return "V2 is degenerate";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Element (g, h) of P x| V# with (g, h)(g', h') = (g g', (g'^{-1} h) h').
struct SemidirectElement {
  FqMatrix g;
  HeisenbergElement h;
};

SemidirectElement sd_mul(const SymplecticSpace& V, const SemidirectElement& x, const SemidirectElement& y) {
  const FqMatrix yinv = *y.g.inverse();
  return {x.g * y.g, heisenberg_mul(V, heisenberg_act(yinv, x.h), y.h)};
}

SemidirectElement sd_inv(const SymplecticSpace& V, const SemidirectElement& x) {
  return {*x.g.inverse(), heisenberg_act(x.g, heisenberg_inv(V, x.h))};
}

// Complement of `sub` in F_p^n spanned by standard unit vectors.
std::vector<FqVector> complement_basis(const FqContext& f, std::size_t n, const std::vector<FqVector>& sub) {
  std::vector<FqVector> acc = sub, out;
  for (std::size_t i = 0; i < n && acc.size() < n; ++i) {
    auto e = unit_vector(f, n, i);
    if (in_span(f, n, acc, e)) continue;
    acc.push_back(e);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FqVector> all_combinations(const FqContext& f, std::size_t n, const std::vector<FqVector>& basis) {
  std::vector<FqVector> out;
  for (const auto& c : all_vectors(f, basis.size())) {
    FqVector v = zero_vector(f, n);
    for (std::size_t i = 0; i < basis.size(); ++i) v = add(v, scale(c[i], basis[i]));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

InductionResult induction_identity_check(const HeisenbergRep& rho, const std::vector<FqVector>& U, InductionMode mode,
                                         bool include_twist) {
  const SymplecticSpace& V = rho.space();
  const FqContext& f = V.field();
  const std::size_t n = V.dim();
  const IsotropicReduction red = isotropic_reduction(V, U);
  const std::size_t u = red.isotropic.size();
  const std::vector<FqVector> reps = all_combinations(f, n, complement_basis(f, n, red.perp));

  InductionResult res;
  std::vector<FqMatrix> levi;
  std::optional<WeilSL2> weil;
  if (mode == InductionMode::with_sl2_levi) {
    if (V.n() != 1) throw std::invalid_argument("induction_identity_check: the Levi mode needs dim V = 2");
    if (U.size() != 1) throw std::invalid_argument("induction_identity_check: the Levi mode needs a Lagrangian line U");
    weil.emplace(rho);
    for (auto& g : enumerate_sl2(f)) {
      bool stable = true;
      for (const auto& b : red.isotropic) stable = stable && in_span(f, n, red.isotropic, g * b);
      if (stable) levi.push_back(std::move(g));
    }
  } else {
    levi.push_back(FqMatrix::identity(f, n));
  }

  // Quotient Heisenberg representation of (U-perp / U)#.
  std::optional<HeisenbergRep> quotient;
  if (red.quotient_dim() > 0) quotient.emplace(SymplecticSpace(V.p(), red.quotient_dim() / 2), rho.iota());
  const bool quotient_is_v = red.isotropic.empty();

  std::vector<CycloMatrix> omega;
  for (const auto& g : levi) omega.push_back(weil ? (*weil)(g) : CycloMatrix::identity(rho.coefficients(), rho.dim()));

  // tau on P x| (U-perp)#; nullopt outside the subgroup.
  auto tau = [&](const SemidirectElement& y) -> std::optional<Cyclotomic> {
    if (!in_span(f, n, red.perp, y.h.v)) return std::nullopt;
    Cyclotomic t = Cyclotomic::one(rho.coefficients());
    if (include_twist && u > 0 && y.g.rows() == n) {
      t = t.scaled(det_sign_character(V, y.g, red.isotropic).value());
    }
    if (!quotient) return t * rho.psi(y.h.a);
    if (weil && quotient_is_v) {
      for (std::size_t k = 0; k < levi.size(); ++k)
        if (levi[k] == y.g) return t * rho.trace_with(omega[k], y.h);
      throw std::logic_error("induction_identity_check: Levi element not found");
    }
    return t * quotient->character({red.quotient_coordinates(y.h.v), y.h.a});
  };

  const auto hs = heisenberg_elements(V);
  for (std::size_t k = 0; k < levi.size(); ++k) {
    for (const auto& h : hs) {
      const SemidirectElement x{levi[k], h};
      res.lhs.push_back(weil ? rho.trace_with(omega[k], h) : rho.character(h));
      Cyclotomic ind = Cyclotomic::zero(rho.coefficients());
      for (const auto& c : reps) {
        const SemidirectElement r{FqMatrix::identity(f, n), {c, f.zero()}};
        const SemidirectElement y = sd_mul(V, sd_mul(V, sd_inv(V, r), x), r);
        if (auto t = tau(y)) ind += *t;
      }
      res.rhs.push_back(std::move(ind));
    }
  }
  res.group_order = res.lhs.size();
  const std::size_t qdim = quotient ? quotient->dim() : 1;
  res.lhs_dim = rho.dim();
  res.rhs_dim = reps.size() * qdim;
  res.equal = res.lhs_dim == res.rhs_dim && res.lhs == res.rhs;
  return res;
}

}  // namespace hforge
