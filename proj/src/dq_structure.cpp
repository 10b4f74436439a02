#include "dqalg/dq_structure.hpp"

#include <limits>

namespace dq {

template <class S>
std::optional<int> min_dq(const MatSubalgebra<S>& a) {
  if (is_commutative(a)) return 1;
  return nilpotency_index(commutator_ideal(a));
}

namespace {

/// d^e, saturating at uint64 max.
std::uint64_t saturating_power(std::uint64_t d, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (d != 0 && out > std::numeric_limits<std::uint64_t>::max() / d) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= d;
  }
  return out;
}

template <class S>
bool all_products_vanish(const std::vector<Matrix<S>>& commutators, const Matrix<S>& prefix, int remaining) {
  if (remaining == 0) return is_zero(prefix);
  // A zero prefix kills every extension, so those tuples are decided at once.
  if (is_zero(prefix)) return true;
  for (const auto& c : commutators) {
    if (!all_products_vanish<S>(commutators, Matrix<S>(prefix * c), remaining - 1)) return false;
  }
  return true;
}

}  // namespace

template <class S>
bool check_dq_bruteforce(const MatSubalgebra<S>& a, int q, std::uint64_t budget) {
  if (q < 1) throw Error(ErrorCode::InvalidQ, "q must be at least 1");
  const std::uint64_t d = static_cast<std::uint64_t>(a.dim());
  const std::uint64_t tuples = saturating_power(d, 2 * q);
  if (tuples > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(d) + "^" + std::to_string(2 * q) +
                                               " tuples exceed the budget of " + std::to_string(budget));
  }
  // Tuples (x_i, y_i) are enumerated through the d^2 ordered commutators [x_i, y_i].
  std::vector<Matrix<S>> commutators;
  for (const auto& x : a.basis()) {
    for (const auto& y : a.basis()) commutators.push_back(commutator<S>(x, y));
  }
  if (commutators.empty()) return true;
  const Matrix<S> id = identity<S>(a.field(), a.n());
  return all_products_vanish<S>(commutators, id, q);
}

template <class S>
std::vector<Index> filtration_dimensions(const IdealSpace<S>& ideal, int q) {
  std::vector<Index> dims{ideal.n()};
  for (const auto& p : ideal_powers(ideal, q)) dims.push_back(acting_image(p, ideal.n()).dim());
  return dims;
}

template <class S>
TriangulationResult<S> block_triangulate(const MatSubalgebra<S>& a, const IdealSpace<S>& ideal) {
  if (ideal.is_zero()) throw Error(ErrorCode::ZeroIdeal, "triangulation needs a nonzero ideal");
  const IdealSpace<S> checked = as_ideal(a, ideal.space());
  const auto index = nilpotency_index(checked);
  if (!index) throw Error(ErrorCode::NotNilpotent, "ideal is not nilpotent");
  const int q = *index;
  const Index n = a.n();

  // images[k] = I^k V, from V (k = 0) down to I^{q-1} V.
  std::vector<Subspace<S>> images{Subspace<S>::whole(a.field(), n)};
  for (const auto& p : ideal_powers(checked, q - 1)) images.push_back(acting_image(p, n));

  SubspaceBuilder<S> chosen(n);
  std::vector<RowVector<S>> columns;
  std::vector<int> parts;
  for (int k = q - 1; k >= 0; --k) {
    const Index before = chosen.dim();
    for (Index i = 0; i < images[k].dim(); ++i) {
      const RowVector<S> v = images[k].vector(i);
      if (chosen.add(v)) columns.push_back(v);
    }
    for (Index i = 0; i < n && chosen.dim() < images[k].dim(); ++i) {
      const RowVector<S> e = unit<S>(a.field(), 1, n, 0, i);
      if (chosen.add(e)) columns.push_back(e);
    }
    parts.push_back(static_cast<int>(chosen.dim() - before));
  }

  TriangulationResult<S> out;
  out.conjugator = Matrix<S>(n, n);
  for (Index j = 0; j < n; ++j) out.conjugator.col(j) = columns[j].transpose();
  out.block_type = BlockType(parts);
  out.conjugated = conjugate_algebra(a, out.conjugator);
  const Matrix<S> xi = matrix_invert<S>(out.conjugator);
  SubspaceBuilder<S> ideal_image(n * n);
  for (const auto& m : checked.basis()) ideal_image.add(flatten<S>(Matrix<S>(xi * m * out.conjugator)));
  out.conjugated_ideal = ideal_image.build();
  for (int k = q - 1; k >= 0; --k) out.filtration_dims.push_back(images[k].dim());
  return out;
}

template <class S>
std::optional<BlockType> detect_type(const MatSubalgebra<S>& a) {
  const auto q = min_dq(a);
  if (!q) return std::nullopt;
  if (*q == 1) return BlockType({static_cast<int>(a.n())});
  const auto dims = filtration_dimensions(commutator_ideal(a), *q);
  std::vector<int> parts;
  for (int i = 1; i <= *q; ++i) parts.push_back(static_cast<int>(dims[*q - i] - dims[*q - i + 1]));
  return BlockType(parts);
}

template <class S>
MaximalityResult<S> is_maximal_dq(const MatSubalgebra<S>& a) {
  MaximalityResult<S> out;
  const auto q = min_dq(a);
  if (!q) return out;
  if (*q == 1) {
    out.maximal = centralizer(a) == a;
    out.block_ids_checked = a.dim() == schur_bound(a.n());
    return out;
  }
  auto tri = block_triangulate(a, commutator_ideal(a));
  const BlockType& type = tri.block_type;
  std::vector<MatSubalgebra<S>> blocks;
  bool blocks_max_comm = true;
  bool blocks_max_dim = true;
  for (int i = 0; i < type.q(); ++i) {
    blocks.push_back(diagonal_block_algebra(tri.conjugated, type, i));
    blocks_max_comm = blocks_max_comm && is_commutative(blocks.back()) && centralizer(blocks.back()) == blocks.back();
    blocks_max_dim = blocks_max_dim && blocks.back().dim() == schur_bound(type.part(i));
  }
  const MatSubalgebra<S> envelope = block_type_algebra(type, blocks);
  const bool fills_envelope =
      envelope.dim() == tri.conjugated.dim() && envelope.space().contains(tri.conjugated.space());
  out.maximal = fills_envelope && blocks_max_comm;
  out.block_ids_checked = blocks_max_dim;
  out.witness = std::move(tri);
  return out;
}

#define DQ_INSTANTIATE_DQ(S)                                                                   \
  template std::optional<int> min_dq<S>(const MatSubalgebra<S>&);                              \
  template bool check_dq_bruteforce<S>(const MatSubalgebra<S>&, int, std::uint64_t);           \
  template std::vector<Index> filtration_dimensions<S>(const IdealSpace<S>&, int);             \
  template TriangulationResult<S> block_triangulate<S>(const MatSubalgebra<S>&, const IdealSpace<S>&); \
  template std::optional<BlockType> detect_type<S>(const MatSubalgebra<S>&);                   \
  template MaximalityResult<S> is_maximal_dq<S>(const MatSubalgebra<S>&);

DQ_INSTANTIATE_DQ(Rational)
DQ_INSTANTIATE_DQ(Fp)

}  // namespace dq
