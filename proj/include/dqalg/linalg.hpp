#pragma once

// Dense exact linear algebra: echelon forms, inverses, kernels and the
// canonical Subspace type. Everything is templated on the scalar and
// explicitly instantiated for Rational and Fp.

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "dqalg/scalar.hpp"

namespace dq {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <class S>
Matrix<S> identity(const FieldSpec& field, Index n) {
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = make_scalar<S>(field, 1);
  return m;
}

/// Matrix unit e_{ij} (0-based).
template <class S>
Matrix<S> unit(const FieldSpec& field, Index rows, Index cols, Index i, Index j) {
  Matrix<S> m = Matrix<S>::Zero(rows, cols);
  m(i, j) = make_scalar<S>(field, 1);
  return m;
}

template <class S>
Matrix<S> unit(const FieldSpec& field, Index n, Index i, Index j) {
  return unit<S>(field, n, n, i, j);
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
S trace(const Matrix<S>& m) {
  S t(0);
  for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& x, const Matrix<S>& y) {
  return x * y - y * x;
}

/// Row-major flattening M_n(K) -> K^{n^2}; the only identification used.
template <class S>
RowVector<S> flatten(const Matrix<S>& m) {
  RowVector<S> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

template <class S>
Matrix<S> unflatten(const RowVector<S>& v, Index n) {
  Matrix<S> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

template <class S>
struct RrefResult {
  Matrix<S> form;
  Index rank = 0;
  std::vector<Index> pivot_columns;
};

template <class S>
RrefResult<S> matrix_rref(Matrix<S> m);

template <class S>
Index matrix_rank(const Matrix<S>& m) {
  return matrix_rref<S>(m).rank;
}

/// Throws Singular, or DimensionMismatch for non-square input.
template <class S>
Matrix<S> matrix_invert(const Matrix<S>& m);

/// Rows form a basis of {x : m x = 0} (x as a column), in canonical order.
template <class S>
Matrix<S> right_kernel(const Matrix<S>& m);

/// A linear subspace of K^m held as its unique reduced row-echelon basis.
template <class S>
class Subspace {
 public:
  explicit Subspace(Index ambient_dim = 0);

  /// Canonical span of the rows. Throws DimensionMismatch on column mismatch.
  static Subspace span(Index ambient_dim, const Matrix<S>& rows);
  static Subspace span(Index ambient_dim, const std::vector<RowVector<S>>& rows);
  static Subspace whole(const FieldSpec& field, Index ambient_dim);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix<S>& basis() const { return basis_; }
  RowVector<S> vector(Index i) const { return basis_.row(i); }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is in the span.
  RowVector<S> residual(const RowVector<S>& v) const;
  bool contains(const RowVector<S>& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  template <class>
  friend class SubspaceBuilder;

  Index ambient_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Incremental reduced echelon form; `add` keeps the rows canonical.
template <class S>
class SubspaceBuilder {
 public:
  explicit SubspaceBuilder(Index ambient_dim) : ambient_(ambient_dim) {}
  explicit SubspaceBuilder(const Subspace<S>& start);

  /// Returns true when v was not already in the span.
  bool add(RowVector<S> v);
  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index ambient_dim() const { return ambient_; }
  bool contains(const RowVector<S>& v) const;
  Subspace<S> build() const;

 private:
  RowVector<S> reduce(RowVector<S> v) const;

  Index ambient_;
  std::vector<RowVector<S>> rows_;
  std::vector<Index> pivots_;
};

/// Kernel of the linear map whose equations are the rows of an echelon
/// subspace, i.e. the orthogonal-complement style solve {x : E x = 0}.
template <class S>
Subspace<S> solution_space(const Subspace<S>& equations);

/// Span of the columns of the given n x n matrices, a subspace of K^n.
template <class S>
Subspace<S> column_space(const std::vector<Matrix<S>>& matrices, Index n);

enum class SubspaceRelation { Contains, Equal, Sum, Intersect };

/// Contains/Equal give a bool, Sum/Intersect a Subspace. Throws
/// DimensionMismatch when ambient dimensions differ.
template <class S>
std::variant<bool, Subspace<S>> subspace_relate(const Subspace<S>& a, const Subspace<S>& b,
                                                 SubspaceRelation mode);

template <class S>
Subspace<S> subspace_span(Index ambient_dim, const std::vector<RowVector<S>>& vectors) {
  return Subspace<S>::span(ambient_dim, vectors);
}

}  // namespace dq
