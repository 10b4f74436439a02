#include <gtest/gtest.h>

#include "support.hpp"

using namespace dqtest;

template <class S>
class ConstructionsTest : public ::testing::Test {
 protected:
  FieldSpec f = default_field<S>();
};

using Scalars = ::testing::Types<Rational, Fp>;
TYPED_TEST_SUITE(ConstructionsTest, Scalars);

TYPED_TEST(ConstructionsTest, CanonicalExamples) {
  using S = TypeParam;
  const auto& f = this->f;
  EXPECT_EQ(canonical_commutative<S>(f, {1, 1}).dim(), 1);

  const auto c14 = canonical_commutative<S>(f, {4, 1});
  std::set<std::pair<int, int>> corner{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(c14.space(), unit_span<S>(f, 4, corner).sum(scalar_algebra<S>(f, 4).space()));

  const auto c33 = canonical_commutative<S>(f, {3, 3});
  const auto expected = MatSubalgebra<S>::from_basis(
      f, 3, {identity<S>(f, 3), mat<S>(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), unit<S>(f, 3, 0, 2)});
  EXPECT_EQ(c33, expected);

  const auto c43 = canonical_commutative<S>(f, {3, 4});
  EXPECT_TRUE(c43.contains(mat<S>(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})));
  EXPECT_TRUE(c43.contains(unit<S>(f, 3, 0, 1)));
  EXPECT_TRUE(c43.contains(unit<S>(f, 3, 2, 2)));
  EXPECT_EQ(canonical_commutative<S>(f, {3, 5}), diagonal_algebra<S>(f, 3));
  EXPECT_EQ(canonical_commutative<S>(f, {2, 2}), diagonal_algebra<S>(f, 2));

  EXPECT_EQ(canonical_commutative<S>(f, {3, 2}).space(),
            unit_span<S>(f, 3, {{0, 2}, {1, 2}}).sum(scalar_algebra<S>(f, 3).space()));
  EXPECT_EQ(canonical_commutative<S>(f, {5, 2}).space(),
            unit_span<S>(f, 5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}).sum(scalar_algebra<S>(f, 5).space()));
}

TYPED_TEST(ConstructionsTest, InadmissibleIds) {
  using S = TypeParam;
  for (const CanonicalBlockId id : {CanonicalBlockId{4, 2}, CanonicalBlockId{2, 3}, CanonicalBlockId{5, 3}, CanonicalBlockId{1, 2}}) {
    try {
      canonical_commutative<S>(this->f, id);
      FAIL() << id.n << "," << id.k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InadmissibleId);
    }
  }
}

TYPED_TEST(ConstructionsTest, EveryCanonicalAlgebraIsMaximalCommutative) {
  using S = TypeParam;
  for (int n = 1; n <= 7; ++n) {
    for (int k : admissible_k(n)) {
      const auto c = canonical_commutative<S>(this->f, {n, k});
      EXPECT_EQ(c.dim(), schur_bound(n)) << n << "," << k;
      EXPECT_TRUE(is_commutative(c));
      EXPECT_EQ(centralizer(c), c) << n << "," << k;
    }
  }
}

TYPED_TEST(ConstructionsTest, BlockTypeAlgebras) {
  using S = TypeParam;
  const auto& f = this->f;
  const auto k = scalar_algebra<S>(f, 1);
  EXPECT_EQ(block_type_algebra<S>(BlockType({1, 1}), {k, k}), upper_triangular_algebra<S>(f, 2));

  const BlockType t23({2, 3});
  const auto a = block_type_algebra<S>(t23, {canonical_commutative<S>(f, {2, 1}), canonical_commutative<S>(f, {3, 1})});
  EXPECT_EQ(a.dim(), 11);
  // K(e11 + e22) + K(e33 + e44 + e55) + K e12 + K e34 + K e35 + the full 2x3 corner
  const auto expected = MatSubalgebra<S>::from_basis(
      f, 5,
      {mat<S>(f, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}),
       mat<S>(f, {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}),
       unit<S>(f, 5, 0, 1), unit<S>(f, 5, 2, 3), unit<S>(f, 5, 2, 4), unit<S>(f, 5, 0, 2), unit<S>(f, 5, 0, 3),
       unit<S>(f, 5, 0, 4), unit<S>(f, 5, 1, 2), unit<S>(f, 5, 1, 3), unit<S>(f, 5, 1, 4)});
  EXPECT_EQ(a, expected);

  EXPECT_EQ(full_type_algebra<S>(f, BlockType({2, 2})).dim(), 12);
  EXPECT_EQ(full_type_algebra<S>(f, BlockType({3})), full_matrix_algebra<S>(f, 3));
  EXPECT_EQ(full_type_algebra<S>(f, BlockType({1, 1, 1, 1})), upper_triangular_algebra<S>(f, 4));

  try {
    block_type_algebra<S>(t23, {k, k});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
  EXPECT_THROW(block_type_algebra<S>(t23, {k}), Error);
}

TYPED_TEST(ConstructionsTest, MaxDimExamples) {
  using S = TypeParam;
  const auto a = max_dim_example<S>(this->f, 5, 2);
  EXPECT_EQ(detect_type(a), BlockType({2, 3}));
  EXPECT_EQ(a.dim(), 11);
  EXPECT_EQ(max_dim_example<S>(this->f, 2, 2), upper_triangular_algebra<S>(this->f, 2));
  EXPECT_EQ(max_dim_example_type(14, 5), BlockType({2, 3, 3, 3, 3}));
  try {
    max_dim_example<S>(this->f, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidQ);
  }
  EXPECT_THROW(max_dim_example<S>(this->f, 3, 4), Error);
}

TEST(Constructions, MaxDimExampleAt14And5) {
  const auto a = max_dim_example<Fp>(kGF101, 14, 5);
  EXPECT_EQ(a.dim(), 92);
  EXPECT_EQ(min_dq(a), 5);
}

TEST(Constructions, MaxDimExamplesReachTheFormula) {
  for (int n = 2; n <= 8; ++n)
    for (int q = 2; q <= n; ++q) {
      const auto a = max_dim_example<Fp>(kGF101, n, q);
      EXPECT_EQ(a.dim(), max_dim_formula(n, q));
      EXPECT_EQ(min_dq(a), q);
    }
}

TYPED_TEST(ConstructionsTest, NamedExamples) {
  using S = TypeParam;
  const auto dual = named_example<S>(this->f, NamedExample::M2DualNumbers);
  EXPECT_EQ(dual.dim(), 8);
  const auto j = radical(dual);
  EXPECT_EQ(j.dim(), 4);
  EXPECT_TRUE(product_space(j, j).is_zero());
  const auto nine = named_example<S>(this->f, NamedExample::NineByNine);
  EXPECT_EQ(nine.dim(), 16);
  EXPECT_TRUE(upper_triangular_algebra<S>(this->f, 9).space().contains(nine.space()));
}

TEST(Constructions, OddCanonicalPairsDifferInImageDimension) {
  const auto f = FieldSpec::rational();
  for (int n : {3, 5, 7, 9}) {
    const auto c1 = canonical_commutative<Rational>(f, {n, 1});
    const auto c2 = canonical_commutative<Rational>(f, {n, 2});
    const auto j1 = radical(c1), j2 = radical(c2);
    EXPECT_EQ(c1.dim(), c2.dim());
    EXPECT_EQ(j1.dim(), j2.dim());
    EXPECT_EQ(product_space(j1, j1).dim(), product_space(j2, j2).dim());
    EXPECT_EQ(acting_image(j1.space(), n).dim(), n / 2);
    EXPECT_EQ(acting_image(j2.space(), n).dim(), n / 2 + 1);
    EXPECT_EQ(abstract_isomorphic_partner({n, 1}), (CanonicalBlockId{n, 2}));
  }
  EXPECT_EQ(abstract_isomorphic_partner({4, 1}), std::nullopt);
}

// Conjugating by invertible upper-triangular matrices fixes each of the
// canonical algebras with a one-dimensional semisimple part.
TEST(Constructions, UpperTriangularConjugationFixesLocalCanonicalAlgebras) {
  const FieldSpec f = kGF101;
  std::mt19937 gen(47);
  std::vector<CanonicalBlockId> ids{{1, 1}, {2, 1}, {3, 1}, {3, 2}};
  for (int n = 4; n <= 7; ++n) {
    ids.push_back({n, 1});
    if (n % 2 == 1) ids.push_back({n, 2});
  }
  for (const auto& id : ids) {
    const auto c = canonical_commutative<Fp>(f, id);
    for (int trial = 0; trial < 10; ++trial) {
      EXPECT_EQ(conjugate_algebra(c, random_upper_invertible<Fp>(gen, f, id.n)), c) << id.n << "," << id.k;
    }
  }
  const auto d = canonical_commutative<Fp>(f, {2, 2});
  EXPECT_NE(conjugate_algebra(d, mat<Fp>(f, {{1, 1}, {0, 1}})), d);
}

TYPED_TEST(ConstructionsTest, BlockConjugator) {
  using S = TypeParam;
  const auto& f = this->f;
  EXPECT_EQ(build_block_conjugator<S>(BlockType({2, 1}), {identity<S>(f, 2), identity<S>(f, 1)}), identity<S>(f, 3));
  const auto x = build_block_conjugator<S>(BlockType({2, 2}), {identity<S>(f, 2), mat<S>(f, {{0, 1}, {1, 0}})});
  EXPECT_EQ(x, mat<S>(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
  try {
    build_block_conjugator<S>(BlockType({2}), {mat<S>(f, {{1, 1}, {1, 1}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  EXPECT_THROW(build_block_conjugator<S>(BlockType({2}), {identity<S>(f, 3)}), Error);
}
