#pragma once

// Hand-rolled generators and conversions shared by the test binaries.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dqalg/classification.hpp"
#include "oracles.hpp"

namespace dqtest {

using namespace dq;

inline const FieldSpec kGF101 = FieldSpec::prime(101);

template <class S>
FieldSpec default_field() {
  if constexpr (std::is_same_v<S, Rational>) return FieldSpec::rational();
  else return kGF101;
}

template <class S>
S sc(const FieldSpec& f, long long v) {
  return make_scalar<S>(f, v);
}

template <class S>
Matrix<S> mat(const FieldSpec& f, std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  Matrix<S> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = sc<S>(f, v);
    ++i;
  }
  return m;
}

template <class S>
RowVector<S> vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  RowVector<S> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) v(i++) = sc<S>(f, x);
  return v;
}

/// Random matrix with entries in [lo, hi].
template <class S>
Matrix<S> random_matrix(std::mt19937& gen, const FieldSpec& f, Index rows, Index cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = sc<S>(f, d(gen));
  return m;
}

/// Unit lower times unit upper times a permutation: invertible by construction.
template <class S>
Matrix<S> random_invertible(std::mt19937& gen, const FieldSpec& f, Index n) {
  Matrix<S> lower = identity<S>(f, n), upper = identity<S>(f, n);
  std::uniform_int_distribution<int> d(-2, 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i > j) lower(i, j) = sc<S>(f, d(gen));
      if (i < j) upper(i, j) = sc<S>(f, d(gen));
    }
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), gen);
  Matrix<S> p = Matrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(i, perm[i]) = sc<S>(f, 1);
  return lower * upper * p;
}

/// Upper triangular with nonzero diagonal.
template <class S>
Matrix<S> random_upper_invertible(std::mt19937& gen, const FieldSpec& f, Index n) {
  std::uniform_int_distribution<int> diag(1, 9), off(-9, 9);
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) m(i, j) = sc<S>(f, i == j ? diag(gen) : off(gen));
  return m;
}

/// Random nondecreasing-or-not composition of n into q parts.
inline BlockType random_type(std::mt19937& gen, int n, int q) {
  std::vector<int> parts(q, 1);
  std::uniform_int_distribution<int> pick(0, q - 1);
  for (int left = n - q; left > 0; --left) ++parts[pick(gen)];
  return BlockType(parts);
}

/// Block-type algebra with randomly chosen admissible canonical blocks.
template <class S>
MatSubalgebra<S> random_canonical_block_algebra(std::mt19937& gen, const FieldSpec& f, const BlockType& type,
                                                std::vector<CanonicalBlockId>* ids = nullptr) {
  std::vector<MatSubalgebra<S>> blocks;
  for (int p : type.parts()) {
    const auto ks = admissible_k(p);
    std::uniform_int_distribution<std::size_t> d(0, ks.size() - 1);
    const CanonicalBlockId id{p, ks[d(gen)]};
    if (ids) ids->push_back(id);
    blocks.push_back(canonical_commutative<S>(f, id));
  }
  return block_type_algebra<S>(type, blocks);
}

/// Unital closure of one or two sparse random matrices.
template <class S>
MatSubalgebra<S> random_subalgebra(std::mt19937& gen, const FieldSpec& f, Index n) {
  std::uniform_int_distribution<int> count(1, 2), keep(0, 3), val(-2, 2);
  std::vector<Matrix<S>> gens;
  for (int g = count(gen); g > 0; --g) {
    Matrix<S> m = Matrix<S>::Zero(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (keep(gen) == 0) m(i, j) = sc<S>(f, val(gen));
    gens.push_back(m);
  }
  return unital_closure<S>(f, n, gens);
}

inline oracle::Mat to_oracle(const Matrix<Rational>& m, std::int64_t p) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer num = boost::multiprecision::numerator(m(i, j));
      const Integer den = boost::multiprecision::denominator(m(i, j));
      const std::int64_t a = oracle::mod(static_cast<std::int64_t>(num % p), p);
      const std::int64_t b = oracle::mod(static_cast<std::int64_t>(den % p), p);
      out[i][j] = a * oracle::inv_mod(b, p) % p;
    }
  return out;
}

inline oracle::Mat to_oracle(const Matrix<Fp>& m, std::int64_t) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value();
  return out;
}

/// Span of the matrix units at the given cells.
template <class S>
Subspace<S> unit_span(const FieldSpec& f, Index n, const std::set<std::pair<int, int>>& cells) {
  std::vector<RowVector<S>> rows;
  for (auto [r, c] : cells) rows.push_back(flatten<S>(unit<S>(f, n, r, c)));
  return Subspace<S>::span(n * n, rows);
}

}  // namespace dqtest
