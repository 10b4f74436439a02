#pragma once

// Dimension formulas, enumeration of maximum-dimension types, class counts,
// recognition of canonical commutative blocks and the isomorphism decision
// for block-type algebras with maximum-dimension blocks.
//
// Statements that rely on an algebraically closed ground field are computed
// over Q or GF(p) here, so every result that quotes them carries
// field_caveat = true.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqalg/dq_structure.hpp"

namespace dq {

/// q + sum floor(n_i^2/4) + sum_{i<j} n_i n_j.
std::int64_t type_dimension(const BlockType& type);

/// Largest dimension of a D_q subalgebra of M_n. Throws InvalidQ unless 1 <= q <= n.
std::int64_t max_dim_formula(int n, int q);

struct ModuleBound {
  Rational radicand;
  /// Smallest b >= 0 with b^2 >= radicand.
  std::int64_t bound = 0;
};

/// Lower bound for the dimension of a faithful module of a D_q algebra of
/// dimension dim_a. Throws InvalidInput unless q >= 1 and dim_a >= q.
ModuleBound faithful_module_bound(std::int64_t dim_a, int q);

/// Pairwise size condition met by every maximum-dimension type: the sizes
/// differ by 0 or 2 when both are even and by 0 or 1 otherwise.
bool sizes_compatible(int a, int b);

struct TypeEntry {
  BlockType sorted;
  std::uint64_t ordered_count = 0;
  /// 's' when floor(n/q) is even, 't' when odd.
  char parameter_name = 's';
  int parameter = 0;
};

struct TypeEnumeration {
  int n = 0;
  int q = 0;
  int m = 0;  // floor(n/q)
  int r = 0;  // n - q m
  std::int64_t dimension = 0;
  std::vector<TypeEntry> entries;
  /// Filled only when ordered expansion was requested.
  std::vector<BlockType> ordered;
  bool field_caveat = true;
};

/// Sorted maximum-dimension types from the closed-form parametrization.
std::vector<TypeEntry> max_types_by_parametrization(int n, int q);
/// Sorted types passing the pairwise size test and attaining max_dim_formula,
/// found by scanning all partitions of n into q parts.
std::vector<BlockType> max_types_by_filter(int n, int q);

/// Throws InvalidQ unless 2 <= q <= n; throws std::logic_error if the two
/// generators above disagree.
TypeEnumeration enumerate_max_types(int n, int q, bool expand_ordered = false);

/// Number of distinct orderings of a multiset.
std::uint64_t ordered_count(const BlockType& sorted);

/// Sum over ordered maximum-dimension types of prod |admissible_k(n_i)|.
std::uint64_t count_iso_classes(int n, int q);

/// Throws UnsupportedCharacteristic or NotCanonical.
template <class S>
CanonicalBlockId recognize_block(const MatSubalgebra<S>& a);

template <class S>
struct BlockConjugation {
  CanonicalBlockId id;
  /// P with P^{-1} a P = canonical_commutative(id).
  Matrix<S> conjugator;
};

/// Throws UnsupportedCharacteristic or NotCanonical.
template <class S>
BlockConjugation<S> canonical_block_conjugator(const MatSubalgebra<S>& a);

struct AuxDims {
  Index radical = 0;
  Index commutator = 0;
  Index radical_times_commutator = 0;
  Index commutator_times_radical = 0;
  /// dim C^{q-1} J with C^0 = A; absent when the algebra is not D_q.
  std::optional<Index> top_power_times_radical;
  friend bool operator==(const AuxDims&, const AuxDims&) = default;
};

struct IsoInvariantVector {
  std::optional<BlockType> block_type;
  /// Present when the algebra is maximal with maximum-dimension blocks.
  std::optional<std::vector<CanonicalBlockId>> block_ids;
  AuxDims aux_dims;
  bool field_caveat = true;
  friend bool operator==(const IsoInvariantVector& a, const IsoInvariantVector& b) {
    return a.block_type == b.block_type && a.block_ids == b.block_ids && a.aux_dims == b.aux_dims;
  }
};

/// Throws UnsupportedCharacteristic.
template <class S>
IsoInvariantVector iso_invariants(const MatSubalgebra<S>& a);

template <class S>
struct IsomorphismVerdict {
  bool isomorphic = false;
  /// X with X^{-1} a X = b, present when isomorphic.
  std::optional<Matrix<S>> certificate;
  bool field_caveat = true;
};

/// Throws NotBlockTypeMaxDim unless both inputs are maximal D_q algebras
/// (q >= 2) with maximum-dimension diagonal blocks; UnsupportedCharacteristic.
template <class S>
IsomorphismVerdict<S> is_isomorphic_maxdim(const MatSubalgebra<S>& a, const MatSubalgebra<S>& b);

template <class S>
struct AnalysisReport {
  Index n = 0;
  Index dim = 0;
  bool commutative = false;
  std::optional<int> min_q;
  std::optional<BlockType> type;
  /// "commutator-filtration", "radical-filtration" or empty when no type.
  std::string type_source;
  /// The type is unique only for maximal algebras.
  bool type_canonical = false;
  bool maximal = false;
  std::optional<std::vector<CanonicalBlockId>> block_ids;
  std::optional<Matrix<S>> conjugator;
  std::optional<AuxDims> invariants;
  bool field_caveat = true;
};

template <class S>
AnalysisReport<S> analyze(const MatSubalgebra<S>& a);

}  // namespace dq
