#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace tropic {
namespace {

using testing::kQ;
using testing::mat;
using testing::str;
using testing::vec;

TEST(Linalg, VectorAddition) {
  EXPECT_EQ(str(vec_add(vec(kQ, "1 2"), vec(kQ, "3 0"))), "[3 2]");
  EXPECT_EQ(str(vec_add(vec(kQ, "-inf -inf"), vec(kQ, "1 2"))), "[1 2]");
  EXPECT_EQ(str(vec_add(vec(kQ, "2 2"), vec(kQ, "2 2"))), "[2 2]");
  EXPECT_THROW(vec_add(vec(kQ, "1"), vec(kQ, "1 2")), DimensionMismatch);
}

TEST(Linalg, ScalarMultiplication) {
  auto a = vec(kQ, "1 2");
  EXPECT_EQ(str(scalar_mul(kQ.make(Rational(3)), a)), "[4 5]");
  EXPECT_EQ(str(scalar_mul(kQ.one(), a)), "[1 2]");
  EXPECT_EQ(str(scalar_mul(kQ.zero(), a)), "[-inf -inf]");
}

TEST(Linalg, MatrixVectorProduct) {
  EXPECT_EQ(str(mat_vec(mat(kQ, "[0 2; 1 0]"), vec(kQ, "1 1"))), "[3 2]");
  EXPECT_EQ(str(mat_vec(Matrix<MaxPlusRational>::identity(kQ, 2), vec(kQ, "1 2"))), "[1 2]");
  EXPECT_EQ(str(mat_vec(mat(kQ, "[0 2; 1 0]"), vec(kQ, "-inf -inf"))), "[-inf -inf]");
  EXPECT_THROW(mat_vec(mat(kQ, "[0 2; 1 0]"), vec(kQ, "1")), DimensionMismatch);
}

TEST(Linalg, Conjugate) {
  EXPECT_EQ(str(conjugate(vec(kQ, "1 2"))), "[-1 -2]");
  EXPECT_EQ(str(conjugate(vec(kQ, "0 -inf"))), "[0 -inf]");
  EXPECT_EQ(str(conjugate(vec(kQ, "5"))), "[-5]");
  EXPECT_THROW(conjugate(vec(kQ, "-inf -inf")), ConjugateOfZeroVector);
  EXPECT_EQ(str(conjugate(conjugate(vec(kQ, "1 -inf")))), "[1 -inf]");
}

TEST(Linalg, RowTimesMatrix) {
  EXPECT_EQ(str(row_mat(conjugate(vec(kQ, "1 2")), mat(kQ, "[0 2; 1 0]"))), "[-1 1]");
  auto z = RowVector<MaxPlusRational>::zero(kQ, 2);
  EXPECT_EQ(str(row_mat(z, mat(kQ, "[0 2; 1 0]"))), "[-inf -inf]");
  EXPECT_EQ(str(row_mat(conjugate(vec(kQ, "0 0")), Matrix<MaxPlusRational>::identity(kQ, 2))),
            "[0 0]");
}

TEST(Linalg, SupportAndRegularity) {
  EXPECT_EQ(support(vec(kQ, "1 -inf 3")), (IndexSet{0, 2}));
  EXPECT_FALSE(is_regular(mat(kQ, "[0 -inf; -inf -inf]")));
  EXPECT_TRUE(is_regular(mat(kQ, "[0 -inf; -inf 1]")));
  EXPECT_TRUE(is_regular(vec(kQ, "1 2")));
  EXPECT_FALSE(is_regular(vec(kQ, "1 -inf")));
}

TEST(Linalg, MatrixViews) {
  auto A = mat(kQ, "[1 2 3; 4 5 6]");
  EXPECT_EQ(str(A.column(1)), "[2 5]");
  EXPECT_EQ(str(A.row(1)), "[4 5 6]");
  EXPECT_EQ(str(A.without_column(1)), "[1 3; 4 6]");
  std::vector<std::size_t> cols{2, 0};
  EXPECT_EQ(str(A.select_columns(cols)), "[3 1; 6 4]");
  EXPECT_FALSE(A.column_is_zero(0));
  EXPECT_TRUE(mat(kQ, "[1 -inf; 2 -inf]").column_is_zero(1));
}

class ConjugateProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ConjugateProperties, IdentitiesOnRegularVectors) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<std::size_t> len(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = len(rng);
    std::vector<MaxPlusRational::scalar_type> xs, ys;
    for (std::size_t i = 0; i < m; ++i) {
      Rational v = ratio(num(rng), 4);
      xs.push_back(kQ.make(v));
      ys.push_back(kQ.make(v + ratio(std::abs(num(rng)), 3)));
    }
    Vector<MaxPlusRational> x(kQ, xs), y(kQ, ys);
    EXPECT_TRUE(kQ.is_one(row_vec(conjugate(x), x)));
    EXPECT_TRUE(leq(Matrix<MaxPlusRational>::identity(kQ, m), outer(x, conjugate(x))));
    ASSERT_TRUE(leq(x, y));
    EXPECT_TRUE(leq(conjugate(y), conjugate(x)));
  }
}

TEST_P(ConjugateProperties, ProductIsIsotone) {
  std::mt19937_64 rng(GetParam());
  std::uniform_int_distribution<int> num(-6, 6);
  std::bernoulli_distribution present(0.7);
  auto draw = [&] { return present(rng) ? kQ.make(Rational(num(rng))) : kQ.zero(); };
  auto bump = [&](const MaxPlusRational::scalar_type& s) {
    if (!present(rng)) return s;
    return s.is_zero() ? kQ.make(Rational(num(rng))) : kQ.make(s.value() + std::abs(num(rng)));
  };
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<MaxPlusRational> A(kQ, 3, 2), B(kQ, 3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        A(i, j) = draw();
        B(i, j) = bump(A(i, j));
      }
    }
    Vector<MaxPlusRational> x(kQ, {draw(), draw()});
    Vector<MaxPlusRational> y(kQ, {bump(x[0]), bump(x[1])});
    EXPECT_TRUE(leq(mat_vec(A, x), mat_vec(B, y)));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ConjugateProperties, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace tropic
