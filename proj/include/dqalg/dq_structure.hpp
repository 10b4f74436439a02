#pragma once

// D_q structure: the minimal q, brute-force identity checks, block
// triangulation along an ideal filtration, type detection and maximality.

#include <cstdint>
#include <optional>
#include <vector>

#include "dqalg/algebra.hpp"
#include "dqalg/block_type.hpp"
#include "dqalg/constructions.hpp"

namespace dq {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 1'000'000;

template <class S>
struct TriangulationResult {
  Matrix<S> conjugator;
  BlockType block_type;
  MatSubalgebra<S> conjugated;
  /// X^{-1} I X, strictly block upper for block_type.
  Subspace<S> conjugated_ideal;
  /// dim I^{q-1}V < ... < dim IV < dim V = n.
  std::vector<Index> filtration_dims;
};

/// 1 for commutative algebras, else the nilpotency index of the commutator
/// ideal; nullopt when the algebra satisfies no D_q identity.
template <class S>
std::optional<int> min_dq(const MatSubalgebra<S>& a);

/// Evaluates [x1,y1]...[xq,yq] on every 2q-tuple of basis elements. Throws
/// InvalidQ for q < 1 and BudgetExceeded when dim^{2q} exceeds `budget`.
template <class S>
bool check_dq_bruteforce(const MatSubalgebra<S>& a, int q, std::uint64_t budget = kDefaultBruteForceBudget);

/// Throws ZeroIdeal, NotAnIdeal or NotNilpotent.
template <class S>
TriangulationResult<S> block_triangulate(const MatSubalgebra<S>& a, const IdealSpace<S>& ideal);

/// Type read off the commutator-ideal filtration; nullopt when not D_q.
template <class S>
std::optional<BlockType> detect_type(const MatSubalgebra<S>& a);

template <class S>
struct MaximalityResult {
  bool maximal = false;
  std::optional<TriangulationResult<S>> witness;
  /// Every diagonal block of the witness has dimension floor(n_i^2/4)+1.
  bool block_ids_checked = false;
};

template <class S>
MaximalityResult<S> is_maximal_dq(const MatSubalgebra<S>& a);

/// dim I^k V for k = 0..q (the last entry is 0).
template <class S>
std::vector<Index> filtration_dimensions(const IdealSpace<S>& ideal, int q);

}  // namespace dq
