#pragma once

// Constructors for the concrete algebras: canonical maximal commutative
// algebras C^k_n, block-type algebras, and two fixed worked examples.

#include <optional>
#include <vector>

#include "dqalg/algebra.hpp"
#include "dqalg/block_type.hpp"

namespace dq {

/// Names the canonical commutative algebra C^k_n.
struct CanonicalBlockId {
  int n = 1;
  int k = 1;
  friend bool operator==(const CanonicalBlockId&, const CanonicalBlockId&) = default;
  friend auto operator<=>(const CanonicalBlockId&, const CanonicalBlockId&) = default;
};

/// Canonical indices k available for block size n.
std::vector<int> admissible_k(int n);
bool is_admissible(const CanonicalBlockId& id);

/// C^1_{2l+1} and C^2_{2l+1} are isomorphic as abstract algebras but not
/// conjugate; this returns the partner for such ids and nullopt otherwise.
std::optional<CanonicalBlockId> abstract_isomorphic_partner(const CanonicalBlockId& id);

/// Throws InadmissibleId.
template <class S>
MatSubalgebra<S> canonical_commutative(const FieldSpec& field, const CanonicalBlockId& id);

/// Diagonal strips from `blocks`, full blocks above, zeros below.
/// Throws ShapeMismatch when the blocks do not fit `type`.
template <class S>
MatSubalgebra<S> block_type_algebra(const BlockType& type, const std::vector<MatSubalgebra<S>>& blocks);

template <class S>
MatSubalgebra<S> full_type_algebra(const FieldSpec& field, const BlockType& type);

/// Sorted type with q-r parts floor(n/q) and r parts floor(n/q)+1, every
/// block C^1. Throws InvalidQ unless 2 <= q <= n.
template <class S>
MatSubalgebra<S> max_dim_example(const FieldSpec& field, int n, int q);
BlockType max_dim_example_type(int n, int q);

enum class NamedExample { M2DualNumbers, NineByNine };

template <class S>
MatSubalgebra<S> named_example(const FieldSpec& field, NamedExample id);

template <class S>
MatSubalgebra<S> scalar_algebra(const FieldSpec& field, Index n);
template <class S>
MatSubalgebra<S> diagonal_algebra(const FieldSpec& field, Index n);
template <class S>
MatSubalgebra<S> upper_triangular_algebra(const FieldSpec& field, Index n);

/// Places `m` as diagonal block i of an n x n zero matrix.
template <class S>
Matrix<S> embed_block(const BlockType& type, int i, const Matrix<S>& m);

template <class S>
Matrix<S> diagonal_block(const BlockType& type, int i, const Matrix<S>& m);

/// Entries below the block diagonal are zero.
template <class S>
bool is_block_upper(const BlockType& type, const Matrix<S>& m);

/// Block upper with zero diagonal blocks.
template <class S>
bool is_strictly_block_upper(const BlockType& type, const Matrix<S>& m);

/// Image of `a` under projection to diagonal block i; a subalgebra of M_{n_i}
/// whenever `a` is block upper for `type`.
template <class S>
MatSubalgebra<S> diagonal_block_algebra(const MatSubalgebra<S>& a, const BlockType& type, int i);

/// Block-diagonal diag(X_1, ..., X_q). Throws ShapeMismatch or Singular.
template <class S>
Matrix<S> build_block_conjugator(const BlockType& type, const std::vector<Matrix<S>>& per_block);

}  // namespace dq
