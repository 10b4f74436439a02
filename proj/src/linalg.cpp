#include "dqalg/linalg.hpp"

#include <algorithm>

namespace dq {

template <class S>
RrefResult<S> matrix_rref(Matrix<S> m) {
  RrefResult<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = inverse(m(row, col));
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.form = std::move(m);
  return out;
}

template <class S>
Matrix<S> matrix_invert(const Matrix<S>& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot invert a non-square matrix");
  }
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n).setZero();
  for (Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  auto r = matrix_rref<S>(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) {
    throw Error(ErrorCode::Singular, "matrix is singular");
  }
  return r.form.rightCols(n);
}

template <class S>
Matrix<S> right_kernel(const Matrix<S>& m) {
  const auto r = matrix_rref<S>(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : r.pivot_columns) is_pivot[c] = true;
  const Index nullity = m.cols() - r.rank;
  Matrix<S> k = Matrix<S>::Zero(nullity, m.cols());
  Index out = 0;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(out, f) = S(1);
    for (Index i = 0; i < r.rank; ++i) k(out, r.pivot_columns[i]) = -r.form(i, f);
    ++out;
  }
  return k;
}

template <class S>
SubspaceBuilder<S>::SubspaceBuilder(const Subspace<S>& start) : ambient_(start.ambient_dim()) {
  for (Index i = 0; i < start.dim(); ++i) {
    rows_.push_back(start.basis().row(i));
    pivots_.push_back(start.pivots()[i]);
  }
}

template <class S>
RowVector<S> SubspaceBuilder<S>::reduce(RowVector<S> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const S f = v(pivots_[i]);
    if (!is_zero(f)) v -= f * rows_[i];
  }
  return v;
}

template <class S>
bool SubspaceBuilder<S>::contains(const RowVector<S>& v) const {
  return is_zero(reduce(v));
}

template <class S>
bool SubspaceBuilder<S>::add(RowVector<S> v) {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                  " does not match ambient dimension " +
                                                  std::to_string(ambient_));
  }
  v = reduce(std::move(v));
  Index pc = 0;
  while (pc < ambient_ && is_zero(v(pc))) ++pc;
  if (pc == ambient_) return false;
  v *= inverse(v(pc));
  for (auto& row : rows_) {
    const S f = row(pc);
    if (!is_zero(f)) row -= f * v;
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, pc);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

template <class S>
Subspace<S> SubspaceBuilder<S>::build() const {
  Subspace<S> s(ambient_);
  s.basis_.resize(static_cast<Index>(rows_.size()), ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) s.basis_.row(static_cast<Index>(i)) = rows_[i];
  s.pivots_ = pivots_;
  return s;
}

template <class S>
Subspace<S>::Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

template <class S>
Subspace<S> Subspace<S>::span(Index ambient_dim, const Matrix<S>& rows) {
  if (rows.rows() > 0 && rows.cols() != ambient_dim) {
    throw Error(ErrorCode::DimensionMismatch, "row length does not match ambient dimension");
  }
  SubspaceBuilder<S> b(ambient_dim);
  for (Index i = 0; i < rows.rows(); ++i) b.add(rows.row(i));
  return b.build();
}

template <class S>
Subspace<S> Subspace<S>::span(Index ambient_dim, const std::vector<RowVector<S>>& rows) {
  SubspaceBuilder<S> b(ambient_dim);
  for (const auto& v : rows) b.add(v);
  return b.build();
}

template <class S>
Subspace<S> Subspace<S>::whole(const FieldSpec& field, Index ambient_dim) {
  return span(ambient_dim, identity<S>(field, ambient_dim));
}

template <class S>
RowVector<S> Subspace<S>::residual(const RowVector<S>& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  }
  RowVector<S> r = v;
  for (Index i = 0; i < dim(); ++i) {
    const S f = r(pivots_[i]);
    if (!dq::is_zero(f)) r -= f * basis_.row(i);
  }
  return r;
}

template <class S>
bool Subspace<S>::contains(const RowVector<S>& v) const {
  return dq::is_zero(residual(v));
}

template <class S>
bool Subspace<S>::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  if (other.dim() > dim()) return false;
  for (Index i = 0; i < other.dim(); ++i) {
    if (!contains(RowVector<S>(other.basis_.row(i)))) return false;
  }
  return true;
}

template <class S>
Subspace<S> Subspace<S>::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  SubspaceBuilder<S> b(*this);
  for (Index i = 0; i < other.dim(); ++i) b.add(other.basis_.row(i));
  return b.build();
}

template <class S>
Subspace<S> Subspace<S>::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  // c (rows of A stacked over rows of B) = 0  <=>  c_A A = -c_B B, a common vector.
  Matrix<S> stacked(dim() + other.dim(), ambient_);
  stacked.topRows(dim()) = basis_;
  stacked.bottomRows(other.dim()) = other.basis_;
  const Matrix<S> coeffs = right_kernel<S>(stacked.transpose());
  Matrix<S> common = coeffs.leftCols(dim()) * basis_;
  return span(ambient_, common);
}

template <class S>
Subspace<S> solution_space(const Subspace<S>& equations) {
  return Subspace<S>::span(equations.ambient_dim(), right_kernel<S>(equations.basis()));
}

template <class S>
Subspace<S> column_space(const std::vector<Matrix<S>>& matrices, Index n) {
  SubspaceBuilder<S> b(n);
  for (const auto& m : matrices) {
    for (Index j = 0; j < m.cols() && b.dim() < n; ++j) b.add(m.col(j).transpose());
  }
  return b.build();
}

template <class S>
std::variant<bool, Subspace<S>> subspace_relate(const Subspace<S>& a, const Subspace<S>& b,
                                                 SubspaceRelation mode) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
  switch (mode) {
    case SubspaceRelation::Contains:
      return a.contains(b);
    case SubspaceRelation::Equal:
      return a == b;
    case SubspaceRelation::Sum:
      return a.sum(b);
    case SubspaceRelation::Intersect:
      return a.intersect(b);
  }
  return false;
}

#define DQ_INSTANTIATE_LINALG(S)                                                              \
  template RrefResult<S> matrix_rref<S>(Matrix<S>);                                           \
  template Matrix<S> matrix_invert<S>(const Matrix<S>&);                                      \
  template Matrix<S> right_kernel<S>(const Matrix<S>&);                                       \
  template class Subspace<S>;                                                                 \
  template class SubspaceBuilder<S>;                                                          \
  template Subspace<S> solution_space<S>(const Subspace<S>&);                                 \
  template Subspace<S> column_space<S>(const std::vector<Matrix<S>>&, Index);                 \
  template std::variant<bool, Subspace<S>> subspace_relate<S>(const Subspace<S>&, const Subspace<S>&, \
                                                              SubspaceRelation);

DQ_INSTANTIATE_LINALG(Rational)
DQ_INSTANTIATE_LINALG(Fp)

}  // namespace dq
