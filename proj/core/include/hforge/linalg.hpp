#pragma once

// Dense vectors and matrices over F_q.

#include <cstddef>
#include <optional>
#include <vector>

#include "hforge/ffield.hpp"

namespace hforge {

using FqVector = std::vector<FqElement>;

class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(const FqContext& ctx, std::size_t rows, std::size_t cols);
  static FqMatrix identity(const FqContext& ctx, std::size_t n);
  /// Row-major integer entries reduced into ctx.
  static FqMatrix from_ints(const FqContext& ctx, std::size_t rows, std::size_t cols,
                            const std::vector<std::int64_t>& entries);
  /// Matrix whose columns are the given vectors (all of equal length, at least one).
  static FqMatrix from_columns(const std::vector<FqVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FqContext& context() const { return *ctx_; }
  const FqContext* context_ptr() const { return ctx_; }

  FqElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FqElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FqVector column(std::size_t c) const;
  FqVector row(std::size_t r) const;
  FqMatrix transpose() const;
  FqMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator*(const FqElement& s) const;
  FqVector operator*(const FqVector& v) const;
  bool operator==(const FqMatrix& o) const;
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_alternating() const;

  FqElement det() const;
  std::size_t rank() const;
  std::optional<FqMatrix> inverse() const;
  /// Basis of the right kernel {x : M x = 0}.
  std::vector<FqVector> kernel() const;
  /// Basis of the column span (a subset of the columns, pivot order).
  std::vector<FqVector> column_space() const;
  /// Some x with M x = b, if solvable.
  std::optional<FqVector> solve(const FqVector& b) const;

  /// Lexicographic order on entry indices; for use as a map key.
  bool operator<(const FqMatrix& o) const;

 private:
  const FqContext* ctx_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FqElement> data_;
};

FqVector zero_vector(const FqContext& ctx, std::size_t n);
FqVector unit_vector(const FqContext& ctx, std::size_t n, std::size_t i);
FqVector add(const FqVector& a, const FqVector& b);
FqVector sub(const FqVector& a, const FqVector& b);
FqVector scale(const FqElement& s, const FqVector& v);
FqElement dot(const FqVector& a, const FqVector& b);
bool is_zero(const FqVector& v);
/// u^T M v.
FqElement bilinear(const FqMatrix& m, const FqVector& u, const FqVector& v);

/// Subspaces given by spanning vectors. Results are bases.
std::vector<FqVector> span_basis(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& spanning);
std::size_t subspace_dim(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& spanning);
bool in_span(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& basis, const FqVector& v);
bool same_subspace(const FqContext& ctx, std::size_t n, const std::vector<FqVector>& a, const std::vector<FqVector>& b);
/// {v : v^T G u = 0 for all u in U}.
std::vector<FqVector> orthogonal_complement(const FqMatrix& gram, const std::vector<FqVector>& subspace);

/// Every vector of F_q^n, in lexicographic index order with the first coordinate
/// varying slowest.
std::vector<FqVector> all_vectors(const FqContext& ctx, std::size_t n);
/// One representative per line of F_q^n, normalised to leading coefficient 1.
std::vector<FqVector> projective_points(const FqContext& ctx, std::size_t n);

}  // namespace hforge
