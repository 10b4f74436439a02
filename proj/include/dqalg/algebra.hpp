#pragma once

// Unital subalgebras of M_n(K) and their ideals, stored as subspaces of
// K^{n^2} under the row-major flattening.

#include <optional>
#include <vector>

#include "dqalg/linalg.hpp"

namespace dq {

template <class S>
class MatSubalgebra {
 public:
  using Scalar = S;

  MatSubalgebra() = default;

  /// Trusts the caller that `space` is multiplicatively closed.
  MatSubalgebra(const FieldSpec& field, Index n, Subspace<S> space, bool unital = true);

  /// Spans `basis` and verifies closure; throws ClosureViolation naming the
  /// first basis product that leaves the span.
  static MatSubalgebra from_basis(const FieldSpec& field, Index n, const std::vector<Matrix<S>>& basis);

  const FieldSpec& field() const { return field_; }
  Index n() const { return n_; }
  Index dim() const { return space_.dim(); }
  bool unital() const { return unital_; }
  const Subspace<S>& space() const { return space_; }
  /// Canonical basis (echelon rows of the space), as matrices.
  const std::vector<Matrix<S>>& basis() const { return basis_; }

  bool contains(const Matrix<S>& m) const;

  friend bool operator==(const MatSubalgebra& a, const MatSubalgebra& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.space_ == b.space_;
  }
  friend bool operator!=(const MatSubalgebra& a, const MatSubalgebra& b) { return !(a == b); }

 private:
  FieldSpec field_;
  Index n_ = 0;
  Subspace<S> space_;
  bool unital_ = true;
  std::vector<Matrix<S>> basis_;
};

/// A two-sided ideal of `parent`; space ⊆ parent.space.
template <class S>
class IdealSpace {
 public:
  IdealSpace(const MatSubalgebra<S>& parent, Subspace<S> space);

  const MatSubalgebra<S>& parent() const { return parent_; }
  const Subspace<S>& space() const { return space_; }
  Index n() const { return parent_.n(); }
  Index dim() const { return space_.dim(); }
  bool is_zero() const { return space_.is_zero(); }
  const std::vector<Matrix<S>>& basis() const { return basis_; }

 private:
  MatSubalgebra<S> parent_;
  Subspace<S> space_;
  std::vector<Matrix<S>> basis_;
};

template <class S>
std::vector<Matrix<S>> matrices_of(const Subspace<S>& space, Index n);

template <class S>
MatSubalgebra<S> unital_closure(const FieldSpec& field, Index n, const std::vector<Matrix<S>>& generators);

/// span{x y : x in basis(a), y in basis(b)}. Throws DimensionMismatch.
template <class S>
Subspace<S> product_space(const Subspace<S>& a, const Subspace<S>& b, Index n);

template <class A, class B>
auto product_space(const A& a, const B& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "product of spaces of different sizes");
  return product_space(a.space(), b.space(), a.n());
}

/// Throws NotInAlgebra when a seed matrix lies outside `parent`.
template <class S>
IdealSpace<S> two_sided_ideal(const MatSubalgebra<S>& parent, const std::vector<Matrix<S>>& seed);

/// Throws NotAnIdeal unless `space` is a two-sided ideal of `parent`.
template <class S>
IdealSpace<S> as_ideal(const MatSubalgebra<S>& parent, const Subspace<S>& space);

template <class S>
IdealSpace<S> commutator_ideal(const MatSubalgebra<S>& a);

/// powers[k-1] = ideal^k for k = 1..count, left-to-right products.
template <class S>
std::vector<Subspace<S>> ideal_powers(const IdealSpace<S>& ideal, int count);

/// Least q >= 1 with ideal^q = 0; nullopt when the powers stabilize above zero.
template <class S>
std::optional<int> nilpotency_index(const IdealSpace<S>& ideal);

/// Kernel of the trace form. Throws UnsupportedCharacteristic for GF(p), p <= n.
template <class S>
IdealSpace<S> radical(const MatSubalgebra<S>& a);

template <class S>
MatSubalgebra<S> centralizer(const MatSubalgebra<S>& a);

/// x^{-1} a x. Throws Singular.
template <class S>
MatSubalgebra<S> conjugate_algebra(const MatSubalgebra<S>& a, const Matrix<S>& x);

template <class S>
bool is_commutative(const MatSubalgebra<S>& a);

/// Column span in K^n of the matrices of a space (I·V for an ideal I).
template <class S>
Subspace<S> acting_image(const Subspace<S>& space, Index n);

template <class S>
MatSubalgebra<S> full_matrix_algebra(const FieldSpec& field, Index n);

}  // namespace dq
