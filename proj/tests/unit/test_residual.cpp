#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace tropic {
namespace {

using testing::kQ;
using testing::kR;
using testing::mat;
using testing::str;
using testing::vec;
using Q = MaxPlusRational;

TEST(Consistify, ZeroComponentOfD) {
  auto c = consistify(mat(kQ, "[2 -inf; 1 3]"), vec(kQ, "-inf 5"));
  EXPECT_EQ(str(c.a_hat), "[2 -inf; -inf 3]");
  EXPECT_EQ(c.zero_rows_of_d, IndexSet{0});
  EXPECT_EQ(c.forced_zero_columns, IndexSet{0});
}

TEST(Consistify, RegularDLeavesMatrixAlone) {
  auto A = mat(kQ, "[2 -inf; 1 3]");
  auto c = consistify(A, vec(kQ, "1 5"));
  EXPECT_EQ(c.a_hat, A);
  EXPECT_TRUE(c.forced_zero_columns.empty());
  EXPECT_TRUE(c.zero_rows_of_d.empty());
}

TEST(Consistify, BothColumnsHitZeroRow) {
  auto c = consistify(mat(kQ, "[1 2; 3 4]"), vec(kQ, "-inf 0"));
  EXPECT_EQ(str(c.a_hat), "[1 2; -inf -inf]");
  EXPECT_EQ(c.forced_zero_columns, (IndexSet{0, 1}));
  EXPECT_TRUE(residual_delta(c.a_hat, vec(kQ, "-inf 0")).is_infinite());
}

TEST(Consistify, RejectsZeroD) {
  EXPECT_THROW(consistify(mat(kQ, "[1 2]"), vec(kQ, "-inf")), ZeroVectorD);
}

TEST(Residual, WorkedValues) {
  EXPECT_EQ(str(residual_delta(mat(kQ, "[0; 0]"), vec(kQ, "1 2")), kQ), "1/2");
  EXPECT_EQ(str(residual_delta(Matrix<Q>::identity(kQ, 2), vec(kQ, "1 2")), kQ), "0");
  EXPECT_EQ(str(residual_delta(mat(kQ, "[0 1; -inf -inf]"), vec(kQ, "1 2")), kQ), "inf");
  EXPECT_EQ(str(residual_delta(mat(kQ, "[0 2; 1 0]"), vec(kQ, "3 2")), kQ), "0");
}

TEST(Residual, RejectsInconsistentInput) {
  EXPECT_THROW(residual_delta(mat(kQ, "[2 -inf; 1 3]"), vec(kQ, "-inf 5")), InconsistentInput);
  EXPECT_THROW(residual_delta(mat(kQ, "[2]"), vec(kQ, "-inf")), ZeroVectorD);
}

TEST(Residual, FloatKindAgrees) {
  auto r = residual_delta(mat(kR, "[0; 0]"), vec(kR, "1 2"));
  ASSERT_TRUE(r.is_finite());
  EXPECT_DOUBLE_EQ(r.value().value(), 0.5);
}

TEST(DistanceToSpan, SingleColumn) {
  auto r = distance_to_span(mat(kQ, "[0; 0]"), vec(kQ, "1 2"));
  EXPECT_EQ(str(r.delta, kQ), "1/2");
  EXPECT_EQ(str(*r.minimizer), "[3/2]");
  EXPECT_EQ(str(*r.nearest_point), "[3/2 3/2]");
}

TEST(DistanceToSpan, IdentityAndZeroD) {
  auto r = distance_to_span(Matrix<Q>::identity(kQ, 2), vec(kQ, "1 2"));
  EXPECT_TRUE(is_unit(kQ, r.delta));
  EXPECT_EQ(str(*r.minimizer), "[1 2]");
  auto z = distance_to_span(mat(kQ, "[1 2; 3 4]"), vec(kQ, "-inf -inf"));
  EXPECT_TRUE(is_unit(kQ, z.delta));
  EXPECT_EQ(str(*z.minimizer), "[-inf -inf]");
}

TEST(DistanceToSpan, ZeroMatrix) {
  auto r = distance_to_span(Matrix<Q>::zero(kQ, 2, 2), vec(kQ, "1 2"));
  EXPECT_TRUE(r.delta.is_infinite());
  EXPECT_FALSE(r.minimizer.has_value());
}

TEST(DistanceToSpan, ForcedColumnsAreZeroInMinimizer) {
  auto A = mat(kQ, "[2 -inf; 1 3]");
  auto d = vec(kQ, "-inf 5");
  auto r = distance_to_span(A, d);
  EXPECT_TRUE(is_unit(kQ, r.delta));
  EXPECT_EQ(str(*r.minimizer), "[-inf 2]");
  EXPECT_EQ(*r.nearest_point, d);
}

template <class F>
Vector<F> random_x(std::mt19937_64& rng, const F& f, std::size_t n) {
  std::uniform_int_distribution<int> num(-30, 30);
  std::bernoulli_distribution present(0.8);
  std::vector<typename F::scalar_type> x;
  for (std::size_t j = 0; j < n; ++j) {
    x.push_back(present(rng) ? f.from_rational(ratio(num(rng), 2)) : f.zero());
  }
  return Vector<F>(f, std::move(x));
}

class ResidualProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ResidualProperties, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(GetParam());
  for (std::uint64_t k = 0; k < 150; ++k) {
    auto [A, d] = random_instance<Q>(GetParam() * 1000 + k, 1 + k % 4, 1 + (k / 4) % 4, 0.6, -5, 5);
    auto c = consistify(A, d);
    auto r = distance_to_span(A, d);

    // Proposition-1 style equality of distances through A and Â.
    auto x = random_x(rng, kQ, A.cols());
    EXPECT_EQ(rho(mat_vec(A, x), d), rho(mat_vec(c.a_hat, x), d));

    // The reduced-instance path reports the same residual.
    auto red = reduce_instance(A, d);
    auto via_reduced = red.a.cols() == 0 ? Distance<Q>::infinite()
                                         : detail::residual_unchecked(red.a, red.d);
    EXPECT_EQ(via_reduced, r.delta) << str(A) << " " << str(d);

    if (r.delta.is_infinite()) {
      EXPECT_FALSE(is_regular(c.a_hat.select_rows(red.rows)));
      continue;
    }
    EXPECT_TRUE(kQ.leq(kQ.one(), r.delta.value()));
    EXPECT_EQ(rho(*r.nearest_point, d), r.delta);

    // Sub-solution bound: Â (d⁻Â)⁻ ≤ d.
    auto principal = detail::pseudo_inverse<Q, detail::RowTag, detail::ColumnTag>(row_mat(conjugate(d), c.a_hat));
    EXPECT_TRUE(leq(mat_vec(c.a_hat, principal), d));

    for (int probe = 0; probe < 20; ++probe) {
      auto p = random_x(rng, kQ, A.cols());
      EXPECT_TRUE(distance_leq(kQ, r.delta, rho(mat_vec(A, p), d)));
    }

    // Scaling d leaves Δ alone and shifts the minimizer.
    auto s = kQ.make(ratio(7, 3));
    auto scaled = distance_to_span(A, scalar_mul(s, d));
    EXPECT_EQ(scaled.delta, r.delta);
    EXPECT_EQ(*scaled.minimizer, scalar_mul(s, *r.minimizer));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ResidualProperties, ::testing::Values(21, 22, 23));

}  // namespace
}  // namespace tropic
