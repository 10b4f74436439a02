#include <gtest/gtest.h>

#include "support.hpp"

using namespace dqtest;

template <class S>
class LinalgTest : public ::testing::Test {
 protected:
  FieldSpec f = default_field<S>();
};

using Scalars = ::testing::Types<Rational, Fp>;
TYPED_TEST_SUITE(LinalgTest, Scalars);

TYPED_TEST(LinalgTest, RrefOfIdentity) {
  using S = TypeParam;
  const auto r = matrix_rref<S>(identity<S>(this->f, 2));
  EXPECT_EQ(r.form, identity<S>(this->f, 2));
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.pivot_columns, (std::vector<Index>{0, 1}));
}

TYPED_TEST(LinalgTest, RrefOfProportionalRows) {
  using S = TypeParam;
  const auto r = matrix_rref<S>(mat<S>(this->f, {{1, 2}, {2, 4}}));
  EXPECT_EQ(r.form, mat<S>(this->f, {{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.pivot_columns, (std::vector<Index>{0}));
}

TEST(Linalg, RrefOverGF2) {
  const auto f = FieldSpec::prime(2);
  const auto r = matrix_rref<Fp>(mat<Fp>(f, {{1, 1}, {1, 2}}));
  EXPECT_EQ(r.form, identity<Fp>(f, 2));
  EXPECT_EQ(r.rank, 2);
}

TYPED_TEST(LinalgTest, InvertIdentityAndBlockTriangular) {
  using S = TypeParam;
  EXPECT_EQ(matrix_invert<S>(identity<S>(this->f, 3)), identity<S>(this->f, 3));
  const auto m = mat<S>(this->f, {{1, 0, 3, -2}, {0, 1, 5, 7}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto expected = mat<S>(this->f, {{1, 0, -3, 2}, {0, 1, -5, -7}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(matrix_invert<S>(m), expected);
}

TYPED_TEST(LinalgTest, InvertSingularThrows) {
  using S = TypeParam;
  try {
    matrix_invert<S>(mat<S>(this->f, {{1, 1}, {0, 0}}));
    FAIL() << "expected Singular";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  EXPECT_THROW(matrix_invert<S>(Matrix<S>::Zero(2, 3)), Error);
}

TYPED_TEST(LinalgTest, SpanExamples) {
  using S = TypeParam;
  EXPECT_EQ(subspace_span<S>(3, {}).dim(), 0);
  const auto s = subspace_span<S>(3, {vec<S>(this->f, {1, 0, 0}), vec<S>(this->f, {1, 1, 0})});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_EQ(s.basis(), mat<S>(this->f, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(subspace_span<S>(3, {vec<S>(this->f, {1, 0})}), Error);
}

TEST(Linalg, SpanRankMatchesIndependentOracleOverGF7) {
  const auto f = FieldSpec::prime(7);
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    // rank-deficient: last row is a combination of the first two
    Matrix<Fp> m = random_matrix<Fp>(gen, f, 4, 4, 0, 6);
    m.row(3) = m.row(0) * sc<Fp>(f, 2) + m.row(1) * sc<Fp>(f, 5);
    const auto s = Subspace<Fp>::span(4, m);
    EXPECT_EQ(s.dim(), oracle::rank_mod_p(to_oracle(m, 7), 7));
    EXPECT_LT(s.dim(), 4);
  }
}

TYPED_TEST(LinalgTest, RelateModes) {
  using S = TypeParam;
  const auto e1 = vec<S>(this->f, {1, 0, 0}), e2 = vec<S>(this->f, {0, 1, 0}), e3 = vec<S>(this->f, {0, 0, 1});
  const auto a = subspace_span<S>(3, {e1});
  const auto b = subspace_span<S>(3, {e1, e2});
  EXPECT_FALSE(std::get<bool>(subspace_relate(a, b, SubspaceRelation::Contains)));
  EXPECT_TRUE(std::get<bool>(subspace_relate(b, a, SubspaceRelation::Contains)));
  EXPECT_FALSE(std::get<bool>(subspace_relate(a, b, SubspaceRelation::Equal)));
  EXPECT_EQ(std::get<Subspace<S>>(subspace_relate(a, subspace_span<S>(3, {e2}), SubspaceRelation::Sum)), b);
  const auto x = subspace_span<S>(3, {e1, e2});
  const auto y = subspace_span<S>(3, {e2, e3});
  EXPECT_EQ(std::get<Subspace<S>>(subspace_relate(x, y, SubspaceRelation::Intersect)), subspace_span<S>(3, {e2}));
  EXPECT_THROW(subspace_relate(a, Subspace<S>(4), SubspaceRelation::Sum), Error);
}

TYPED_TEST(LinalgTest, RrefIsIdempotent) {
  using S = TypeParam;
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix<S>(gen, this->f, 1 + trial % 5, 1 + (trial * 7) % 6);
    const auto once = matrix_rref<S>(m);
    const auto twice = matrix_rref<S>(once.form);
    EXPECT_EQ(once.form, twice.form);
    EXPECT_EQ(once.pivot_columns, twice.pivot_columns);
  }
}

TYPED_TEST(LinalgTest, ModularLawOnRandomSubspaces) {
  using S = TypeParam;
  std::mt19937 gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    const Index m = 2 + trial % 6;
    const auto a = Subspace<S>::span(m, random_matrix<S>(gen, this->f, 1 + trial % 4, m, -1, 1));
    const auto b = Subspace<S>::span(m, random_matrix<S>(gen, this->f, 1 + trial % 3, m, -1, 1));
    const auto sum = a.sum(b);
    const auto meet = a.intersect(b);
    EXPECT_EQ(sum.dim() + meet.dim(), a.dim() + b.dim());
    EXPECT_TRUE(sum.contains(a) && sum.contains(b));
    EXPECT_TRUE(a.contains(meet) && b.contains(meet));
  }
}

TYPED_TEST(LinalgTest, InverseIsTwoSided) {
  using S = TypeParam;
  std::mt19937 gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 6;
    const auto m = random_invertible<S>(gen, this->f, n);
    const auto inv = matrix_invert<S>(m);
    EXPECT_EQ(Matrix<S>(m * inv), identity<S>(this->f, n));
    EXPECT_EQ(Matrix<S>(inv * m), identity<S>(this->f, n));
  }
}

TEST(Linalg, RationalArithmeticIsExact) {
  std::mt19937 gen(19);
  std::uniform_int_distribution<long long> d(-1'000'000'007LL, 1'000'000'007LL);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(Integer(d(gen)), Integer(d(gen) | 1));
    const Rational b(Integer(d(gen)), Integer(d(gen) | 1));
    EXPECT_EQ((a + b) - b, a);
    if (b != 0) EXPECT_EQ((a * b) / b, a);
  }
}

TEST(Linalg, ScalarTextForms) {
  EXPECT_EQ(to_text(Rational(Integer(6), Integer(-4))), "-3/2");
  EXPECT_EQ(to_text(Rational(5)), "5");
  EXPECT_EQ(parse_rational("-3/2"), Rational(Integer(-3), Integer(2)));
  EXPECT_EQ(parse_rational("4/2"), Rational(2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_EQ(to_text(Fp::bound(-1, 101)), "100");
  EXPECT_THROW(FieldSpec::prime(100), Error);
}

TEST(Linalg, FieldElementsWithDifferentModuliDoNotMix) {
  EXPECT_THROW(Fp::bound(1, 5) + Fp::bound(1, 7), Error);
  EXPECT_EQ(Fp::bound(3, 7) * Fp(5), Fp::bound(1, 7));
  EXPECT_EQ(Fp::bound(3, 7).inverse(), Fp::bound(5, 7));
}
