#include "hforge/linalg.hpp"

#include <stdexcept>

namespace hforge {

namespace {

void require_same_shape(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("FqMatrix: shape mismatch");
}

// Row reduction in place; returns pivot columns.
std::vector<std::size_t> rref(FqMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    }
    const FqElement iv = m(r, c).inv();
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= iv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FqElement f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FqMatrix::FqMatrix(const FqContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

FqMatrix FqMatrix::identity(const FqContext& ctx, std::size_t n) {
  FqMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

FqMatrix FqMatrix::from_ints(const FqContext& ctx, std::size_t rows, std::size_t cols,
                             const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("FqMatrix: wrong number of entries");
  FqMatrix m(ctx, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = ctx.from_int(entries[i]);
  return m;
}

FqMatrix FqMatrix::from_columns(const std::vector<FqVector>& columns) {
  if (columns.empty() || columns[0].empty()) throw std::invalid_argument("FqMatrix: no columns");
  FqMatrix m(columns[0][0].context(), columns[0].size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) throw std::invalid_argument("FqMatrix: ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

FqVector FqMatrix::column(std::size_t c) const {
  FqVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FqVector FqMatrix::row(std::size_t r) const {
  return FqVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(*ctx_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FqMatrix FqMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("FqMatrix: block out of range");
  FqMatrix b(*ctx_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FqMatrix: dimension mismatch in product");
  FqMatrix out(*ctx_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FqElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const FqElement& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  require_same_shape(*this, o);
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
  require_same_shape(*this, o);
  FqMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

FqMatrix FqMatrix::operator*(const FqElement& s) const {
  FqMatrix out = *this;
  for (auto& e : out.data_) e *= s;
  return out;
}

FqVector FqMatrix::operator*(const FqVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FqMatrix: dimension mismatch in matrix-vector product");
  FqVector out(rows_, ctx_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool FqMatrix::operator<(const FqMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i].index() != o.data_[i].index()) return data_[i].index() < o.data_[i].index();
  }
  return false;
}

bool FqMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c).index() != (r == c ? 1u : 0u)) return false;
  return true;
}

bool FqMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool FqMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool FqMatrix::is_alternating() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, r).is_zero()) return false;
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  }
  return true;
}

FqElement FqMatrix::det() const {
  if (!square()) throw std::invalid_argument("FqMatrix: determinant of non-square matrix");
  FqMatrix m = *this;
  FqElement d = ctx_->one();
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m(piv, c).is_zero()) ++piv;
    if (piv == rows_) return ctx_->zero();
    if (piv != c) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(piv, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    const FqElement iv = m(c, c).inv();
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      const FqElement f = m(i, c) * iv;
      for (std::size_t k = c; k < cols_; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return d;
}

std::size_t FqMatrix::rank() const {
  FqMatrix m = *this;
  return rref(m).size();
}

std::optional<FqMatrix> FqMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("FqMatrix: inverse of non-square matrix");
  const std::size_t n = rows_;
  FqMatrix aug(*ctx_, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = ctx_->one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

std::vector<FqVector> FqMatrix::kernel() const {
  FqMatrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<FqVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(cols_, ctx_->zero());
    v[free] = ctx_->one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FqVector> FqMatrix::column_space() const {
  FqMatrix m = *this;
  auto piv = rref(m);
  std::vector<FqVector> out;
  for (auto c : piv) out.push_back(column(c));
  return out;
}

std::optional<FqVector> FqMatrix::solve(const FqVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("FqMatrix: rhs has wrong length");
  FqMatrix aug(*ctx_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  FqVector x(cols_, ctx_->zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, cols_);
  return x;
}

FqVector zero_vector(const FqContext& ctx, std::size_t n) { return FqVector(n, ctx.zero()); }

FqVector unit_vector(const FqContext& ctx, std::size_t n, std::size_t i) {
  FqVector v(n, ctx.zero());
  v.at(i) = ctx.one();
  return v;
}

FqVector add(const FqVector& a, const FqVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  FqVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FqVector sub(const FqVector& a, const FqVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  FqVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FqVector scale(const FqElement& s, const FqVector& v) {
  FqVector r = v;
  for (auto& e : r) e *= s;
  return r;
}

FqElement dot(const FqVector& a, const FqVector& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("vector length mismatch");
  FqElement s = a[0].context().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const FqVector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

FqElement bilinear(const FqMatrix& m, const FqVector& u, const FqVector& v) {
  if (u.size() != m.rows() || v.size() != m.cols()) throw std::invalid_argument("bilinear: dimension mismatch");
  return dot(u, m * v);
}

std::vector<FqVector> span_basis(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& spanning) {
  if (spanning.empty()) return {};
  FqMatrix m(ctx, spanning.size(), n);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != n) throw std::invalid_argument("span_basis: vector length mismatch");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = spanning[r][c];
  }
  auto piv = rref(m);
  std::vector<FqVector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(i));
  return out;
}

std::size_t subspace_dim(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& spanning) {
  return span_basis(ctx, n, spanning).size();
}

bool in_span(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& basis, const FqVector& v) {
  auto ext = basis;
  ext.push_back(v);
  return subspace_dim(ctx, n, ext) == subspace_dim(ctx, n, basis);
}

bool same_subspace(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& a,
                   const std::vector<FqVector>& b) {
  const std::size_t da = subspace_dim(ctx, n, a);
  if (da != subspace_dim(ctx, n, b)) return false;
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return subspace_dim(ctx, n, both) == da;
}

std::vector<FqVector> orthogonal_complement(const FqMatrix& gram, const std::vector<FqVector>& subspace) {
  const std::size_t n = gram.rows();
  const FqContext& ctx = gram.context();
  if (subspace.empty()) {
    std::vector<FqVector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(ctx, n, i));
    return all;
  }
  // Rows u^T G; kernel gives {v : u^T G v = 0}.
  FqMatrix m(ctx, subspace.size(), n);
  for (std::size_t r = 0; r < subspace.size(); ++r) {
    FqVector row = gram.transpose() * subspace[r];
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m.kernel();
}

std::vector<FqVector> all_vectors(const FqContext& ctx, std::size_t n) {
  const std::uint64_t q = ctx.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (1u << 24) / q) throw std::length_error("all_vectors: space too large to enumerate");
    total *= q;
  }
  std::vector<FqVector> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) {
    FqVector v(n, ctx.zero());
    std::uint64_t t = k;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = ctx.from_index(t % q);
      t /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FqVector> projective_points(const FqContext& ctx, std::size_t n) {
  std::vector<FqVector> out;
  for (auto& v : all_vectors(ctx, n)) {
    for (const auto& c : v) {
      if (c.is_zero()) continue;
      if (c.is_one()) out.push_back(std::move(v));
      break;
    }
  }
  return out;
}

}  // namespace hforge
