#include "dqalg/constructions.hpp"

#include <algorithm>
#include <utility>

namespace dq {

std::vector<int> admissible_k(int n) {
  if (n < 1) return {};
  if (n == 1) return {1};
  if (n == 2) return {1, 2};
  if (n == 3) return {1, 2, 3, 4, 5};
  if (n % 2 == 0) return {1};
  return {1, 2};
}

bool is_admissible(const CanonicalBlockId& id) {
  const auto ks = admissible_k(id.n);
  return std::find(ks.begin(), ks.end(), id.k) != ks.end();
}

std::optional<CanonicalBlockId> abstract_isomorphic_partner(const CanonicalBlockId& id) {
  if (id.n >= 3 && id.n % 2 == 1 && (id.k == 1 || id.k == 2)) return CanonicalBlockId{id.n, 3 - id.k};
  return std::nullopt;
}

namespace {

using Cell = std::pair<Index, Index>;

template <class S>
MatSubalgebra<S> span_of(const FieldSpec& field, Index n, const std::vector<Matrix<S>>& mats) {
  SubspaceBuilder<S> b(n * n);
  for (const auto& m : mats) b.add(flatten<S>(m));
  return MatSubalgebra<S>(field, n, b.build(), true);
}

/// Sum of unit matrices over the listed cells.
template <class S>
Matrix<S> units(const FieldSpec& field, Index n, const std::vector<Cell>& cells) {
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (auto [i, j] : cells) m(i, j) = make_scalar<S>(field, 1);
  return m;
}

/// K I_n plus the full rectangle rows [0, r) x cols [c, n).
template <class S>
MatSubalgebra<S> identity_plus_corner(const FieldSpec& field, Index n, Index r, Index c) {
  std::vector<Matrix<S>> mats{identity<S>(field, n)};
  for (Index i = 0; i < r; ++i)
    for (Index j = c; j < n; ++j) mats.push_back(unit<S>(field, n, i, j));
  return span_of<S>(field, n, mats);
}

}  // namespace

template <class S>
MatSubalgebra<S> canonical_commutative(const FieldSpec& field, const CanonicalBlockId& id) {
  if (!is_admissible(id)) {
    throw Error(ErrorCode::InadmissibleId, "no canonical algebra C^" + std::to_string(id.k) + "_" +
                                               std::to_string(id.n));
  }
  const Index n = id.n;
  const Index l = n / 2;
  if (id.k == 1) return identity_plus_corner<S>(field, n, l, l);
  if (n == 2) return diagonal_algebra<S>(field, 2);
  if (id.k == 2) return identity_plus_corner<S>(field, n, l + 1, l + 1);
  // n == 3 from here on
  switch (id.k) {
    case 3:
      return span_of<S>(field, 3,
                        {identity<S>(field, 3), units<S>(field, 3, {{0, 1}, {1, 2}}), unit<S>(field, 3, 0, 2)});
    case 4:
      return span_of<S>(field, 3,
                        {units<S>(field, 3, {{0, 0}, {1, 1}}), unit<S>(field, 3, 0, 1), unit<S>(field, 3, 2, 2)});
    default:
      return diagonal_algebra<S>(field, 3);
  }
}

template <class S>
Matrix<S> embed_block(const BlockType& type, int i, const Matrix<S>& m) {
  Matrix<S> out = Matrix<S>::Zero(type.n(), type.n());
  out.block(type.offset(i), type.offset(i), type.part(i), type.part(i)) = m;
  return out;
}

template <class S>
Matrix<S> diagonal_block(const BlockType& type, int i, const Matrix<S>& m) {
  return m.block(type.offset(i), type.offset(i), type.part(i), type.part(i));
}

template <class S>
bool is_block_upper(const BlockType& type, const Matrix<S>& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    const int br = type.block_of(static_cast<int>(r));
    for (Index c = 0; c < type.offset(br); ++c) {
      if (!is_zero(m(r, c))) return false;
    }
  }
  return true;
}

template <class S>
bool is_strictly_block_upper(const BlockType& type, const Matrix<S>& m) {
  if (!is_block_upper(type, m)) return false;
  for (int i = 0; i < type.q(); ++i) {
    if (!is_zero(diagonal_block(type, i, m))) return false;
  }
  return true;
}

template <class S>
MatSubalgebra<S> block_type_algebra(const BlockType& type, const std::vector<MatSubalgebra<S>>& blocks) {
  if (static_cast<int>(blocks.size()) != type.q()) {
    throw Error(ErrorCode::ShapeMismatch, "type " + type.describe() + " needs " + std::to_string(type.q()) +
                                              " blocks, got " + std::to_string(blocks.size()));
  }
  for (int i = 0; i < type.q(); ++i) {
    if (blocks[i].n() != type.part(i)) {
      throw Error(ErrorCode::ShapeMismatch, "block " + std::to_string(i + 1) + " has size " +
                                                std::to_string(blocks[i].n()) + ", type needs " +
                                                std::to_string(type.part(i)));
    }
    if (blocks[i].field() != blocks[0].field()) {
      throw Error(ErrorCode::ShapeMismatch, "blocks are over different fields");
    }
  }
  const FieldSpec field = blocks[0].field();
  const Index n = type.n();
  SubspaceBuilder<S> b(n * n);
  bool unital = true;
  for (int i = 0; i < type.q(); ++i) {
    unital = unital && blocks[i].unital();
    for (const auto& m : blocks[i].basis()) b.add(flatten<S>(embed_block<S>(type, i, m)));
  }
  for (Index r = 0; r < n; ++r) {
    const int br = type.block_of(static_cast<int>(r));
    for (Index c = type.offset(br) + type.part(br); c < n; ++c) b.add(flatten<S>(unit<S>(field, n, r, c)));
  }
  return MatSubalgebra<S>(field, n, b.build(), unital);
}

template <class S>
MatSubalgebra<S> full_type_algebra(const FieldSpec& field, const BlockType& type) {
  std::vector<MatSubalgebra<S>> blocks;
  for (int p : type.parts()) blocks.push_back(full_matrix_algebra<S>(field, p));
  return block_type_algebra<S>(type, blocks);
}

BlockType max_dim_example_type(int n, int q) {
  if (q < 2 || q > n) {
    throw Error(ErrorCode::InvalidQ, "need 2 <= q <= n, got n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
  const int m = n / q;
  const int r = n - q * m;
  std::vector<int> parts(q - r, m);
  parts.insert(parts.end(), r, m + 1);
  return BlockType(parts);
}

template <class S>
MatSubalgebra<S> max_dim_example(const FieldSpec& field, int n, int q) {
  const BlockType type = max_dim_example_type(n, q);
  std::vector<MatSubalgebra<S>> blocks;
  for (int p : type.parts()) blocks.push_back(canonical_commutative<S>(field, {p, 1}));
  return block_type_algebra<S>(type, blocks);
}

namespace {

// Free parameters of the 9x9 example of U_3^*(U_3^*) type, each listed as the
// 1-based cells it occupies.
const std::vector<std::vector<Cell>> kNineByNine = {
    {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 9}},
    {{1, 2}, {4, 5}, {7, 8}},
    {{1, 3}, {4, 6}, {7, 9}},
    {{2, 3}, {5, 6}, {8, 9}},
    {{1, 4}, {2, 5}, {3, 6}},
    {{1, 5}},
    {{1, 6}},
    {{2, 6}},
    {{4, 7}, {5, 8}, {6, 9}},
    {{4, 8}},
    {{4, 9}},
    {{5, 9}},
    {{1, 7}, {2, 8}, {3, 9}},
    {{1, 8}},
    {{1, 9}},
    {{2, 9}},
};

// a11, b11, a12, b12, a21, b21, a22, b22 in the dual-number embedding (0-based).
const std::vector<std::vector<Cell>> kM2DualNumbers = {
    {{0, 0}, {1, 1}}, {{0, 1}}, {{0, 2}, {1, 3}}, {{0, 3}},
    {{2, 0}, {3, 1}}, {{2, 1}}, {{2, 2}, {3, 3}}, {{2, 3}},
};

}  // namespace

template <class S>
MatSubalgebra<S> named_example(const FieldSpec& field, NamedExample id) {
  std::vector<Matrix<S>> mats;
  if (id == NamedExample::M2DualNumbers) {
    for (const auto& cells : kM2DualNumbers) mats.push_back(units<S>(field, 4, cells));
    return MatSubalgebra<S>::from_basis(field, 4, mats);
  }
  for (const auto& cells : kNineByNine) {
    std::vector<Cell> zero_based;
    for (auto [i, j] : cells) zero_based.emplace_back(i - 1, j - 1);
    mats.push_back(units<S>(field, 9, zero_based));
  }
  return MatSubalgebra<S>::from_basis(field, 9, mats);
}

template <class S>
MatSubalgebra<S> scalar_algebra(const FieldSpec& field, Index n) {
  return span_of<S>(field, n, {identity<S>(field, n)});
}

template <class S>
MatSubalgebra<S> diagonal_algebra(const FieldSpec& field, Index n) {
  std::vector<Matrix<S>> mats;
  for (Index i = 0; i < n; ++i) mats.push_back(unit<S>(field, n, i, i));
  return span_of<S>(field, n, mats);
}

template <class S>
MatSubalgebra<S> upper_triangular_algebra(const FieldSpec& field, Index n) {
  std::vector<Matrix<S>> mats;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) mats.push_back(unit<S>(field, n, i, j));
  return span_of<S>(field, n, mats);
}

template <class S>
MatSubalgebra<S> diagonal_block_algebra(const MatSubalgebra<S>& a, const BlockType& type, int i) {
  const Index ni = type.part(i);
  SubspaceBuilder<S> b(ni * ni);
  for (const auto& m : a.basis()) b.add(flatten<S>(Matrix<S>(diagonal_block<S>(type, i, m))));
  return MatSubalgebra<S>(a.field(), ni, b.build(), a.unital());
}

template <class S>
Matrix<S> build_block_conjugator(const BlockType& type, const std::vector<Matrix<S>>& per_block) {
  if (static_cast<int>(per_block.size()) != type.q()) {
    throw Error(ErrorCode::ShapeMismatch, "one conjugator block per diagonal block is required");
  }
  Matrix<S> x = Matrix<S>::Zero(type.n(), type.n());
  for (int i = 0; i < type.q(); ++i) {
    if (per_block[i].rows() != type.part(i) || per_block[i].cols() != type.part(i)) {
      throw Error(ErrorCode::ShapeMismatch, "conjugator block " + std::to_string(i + 1) + " has the wrong size");
    }
    if (matrix_rank<S>(per_block[i]) != type.part(i)) {
      throw Error(ErrorCode::Singular, "conjugator block " + std::to_string(i + 1) + " is singular");
    }
    x.block(type.offset(i), type.offset(i), type.part(i), type.part(i)) = per_block[i];
  }
  return x;
}

#define DQ_INSTANTIATE_CONSTRUCTIONS(S)                                                             \
  template MatSubalgebra<S> canonical_commutative<S>(const FieldSpec&, const CanonicalBlockId&);    \
  template MatSubalgebra<S> block_type_algebra<S>(const BlockType&, const std::vector<MatSubalgebra<S>>&); \
  template MatSubalgebra<S> full_type_algebra<S>(const FieldSpec&, const BlockType&);              \
  template MatSubalgebra<S> max_dim_example<S>(const FieldSpec&, int, int);                        \
  template MatSubalgebra<S> named_example<S>(const FieldSpec&, NamedExample);                      \
  template MatSubalgebra<S> scalar_algebra<S>(const FieldSpec&, Index);                            \
  template MatSubalgebra<S> diagonal_algebra<S>(const FieldSpec&, Index);                          \
  template MatSubalgebra<S> upper_triangular_algebra<S>(const FieldSpec&, Index);                  \
  template Matrix<S> embed_block<S>(const BlockType&, int, const Matrix<S>&);                      \
  template Matrix<S> diagonal_block<S>(const BlockType&, int, const Matrix<S>&);                   \
  template bool is_block_upper<S>(const BlockType&, const Matrix<S>&);                             \
  template bool is_strictly_block_upper<S>(const BlockType&, const Matrix<S>&);                    \
  template MatSubalgebra<S> diagonal_block_algebra<S>(const MatSubalgebra<S>&, const BlockType&, int); \
  template Matrix<S> build_block_conjugator<S>(const BlockType&, const std::vector<Matrix<S>>&);

DQ_INSTANTIATE_CONSTRUCTIONS(Rational)
DQ_INSTANTIATE_CONSTRUCTIONS(Fp)

}  // namespace dq
