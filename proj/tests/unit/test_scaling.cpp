#include <gtest/gtest.h>

#include <cmath>

#include "instances.hpp"
#include "propalloc/error.hpp"
#include "propalloc/oracle.hpp"
#include "propalloc/scaling.hpp"
#include "propalloc/structure.hpp"

namespace propalloc {
namespace {

TEST(Sinkhorn, HexagonUniformFixedPoint) {
  Instance g = gen_even_cycle(3);
  ScalingResult r = sinkhorn(g, 1e-9, 1'000'000);
  ASSERT_EQ(r.status, ScalingStatus::converged);
  EXPECT_LE(r.residual, 1e-9);
  for (double y : r.y) EXPECT_DOUBLE_EQ(y, r.y[0]);
  for (const Edge& e : g.edges()) EXPECT_NEAR(r.x[e.left] * r.y[e.right], 0.5, 1e-12);
  WeightVector alpha = weights_from_scaling(r);
  for (double a : alpha.values()) EXPECT_DOUBLE_EQ(a, 1.0);
}

// Closed form for K_{2,2}, S = C = (1, 2): x = (1/s, 2/s), y = (s/3, 2s/3).
// Scaled entries are (1/3, 2/3; 2/3, 4/3); row sums (1, 2), column sums (1, 2).
TEST(Sinkhorn, WeightedK22ClosedForm) {
  Instance g = testing::weighted_k22();
  // Exact check of the closed form with entries scaled by 3 (s cancels).
  const std::int64_t scaled[2][2] = {{1, 2}, {2, 4}};
  EXPECT_EQ(scaled[0][0] + scaled[0][1], 3 * g.supply(0));
  EXPECT_EQ(scaled[1][0] + scaled[1][1], 3 * g.supply(1));
  EXPECT_EQ(scaled[0][0] + scaled[1][0], 3 * g.capacity(0));
  EXPECT_EQ(scaled[0][1] + scaled[1][1], 3 * g.capacity(1));

  ScalingResult r = sinkhorn(g);
  ASSERT_EQ(r.status, ScalingStatus::converged);
  EXPECT_NEAR(r.y[1] / r.y[0], 2.0, 1e-8);
  for (const Edge& e : g.edges()) {
    EXPECT_NEAR(r.x[e.left] * r.y[e.right], scaled[e.left][e.right] / 3.0, 1e-8);
  }
  WeightVector alpha = weights_from_scaling(r);
  EXPECT_DOUBLE_EQ(alpha[0], 1.0);
  EXPECT_NEAR(alpha[1], 2.0, 1e-8);

  ScalingResult closed{{1.0 / 5.0, 2.0 / 5.0}, {5.0 / 3.0, 10.0 / 3.0}, 0.0, 0, ScalingStatus::converged};
  EXPECT_TRUE(verify_scaling(g, closed, 1e-12));
}

TEST(Sinkhorn, Path3NeverConverges) {
  Instance g = gen_path3();
  double previous = 1.0;
  for (std::int64_t cap : {1'000, 10'000, 100'000, 1'000'000}) {
    ScalingResult r = sinkhorn(g, 1e-9, cap);
    EXPECT_NE(r.status, ScalingStatus::converged);
    // The pendant bin j1 must absorb all of i1, so y(j2)/y(j1) -> 0.
    const double ratio = r.y[1] / r.y[0];
    EXPECT_LT(ratio, previous);
    previous = ratio;
    EXPECT_THROW(weights_from_scaling(r), PreconditionError);
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(Sinkhorn, DivergenceDetector) {
  ScalingOptions opts;
  opts.divergence_ratio = 1e3;
  ScalingResult r = sinkhorn(gen_path3(), opts);
  EXPECT_EQ(r.status, ScalingStatus::diverged);
  EXPECT_GT(r.y[0] / r.y[1], 1e3);
}

TEST(Sinkhorn, Preconditions) {
  EXPECT_THROW(sinkhorn(testing::two_squares()), PreconditionError);
  EXPECT_THROW(sinkhorn(testing::make_instance({1, 1}, {3}, {{0, 0}, {1, 0}})), PreconditionError);
  EXPECT_THROW(sinkhorn(gen_even_cycle(3), 0.0, 10), std::invalid_argument);
  EXPECT_THROW(sinkhorn(gen_even_cycle(3), 1e-9, 0), std::invalid_argument);
}

TEST(Sinkhorn, FixedPointIsStable) {
  Instance g = gen_random_mc(9, 6, 4);
  ScalingResult r = sinkhorn(g);
  ASSERT_EQ(r.status, ScalingStatus::converged);
  ScalingOptions one;
  one.max_iterations = 1;
  one.tolerance = 1e-300;
  ScalingResult again = sinkhorn_from(g, r.y, one);
  ASSERT_EQ(again.iterations, 1);
  // At a converged point one more sweep moves nothing beyond the residual scale.
  for (std::size_t i = 0; i < g.left_count(); ++i) EXPECT_NEAR(again.x[i], r.x[i], 1e-7 * r.x[i]);
  for (std::size_t j = 0; j < g.right_count(); ++j) EXPECT_NEAR(again.y[j], r.y[j], 1e-7 * r.y[j]);

  // Exact fixed point: the hexagon at y = 1.
  ScalingResult hex = sinkhorn_from(gen_even_cycle(3), std::vector<double>(3, 1.0), one);
  for (double y : hex.y) EXPECT_NEAR(y, 1.0, 1e-12);
  for (double x : hex.x) EXPECT_NEAR(x, 0.5, 1e-12);
}

TEST(Sinkhorn, GaugeInvariance) {
  Instance g = gen_random_mc(8, 5, 12);
  ScalingResult r = sinkhorn(g);
  ASSERT_EQ(r.status, ScalingStatus::converged);
  for (double t : {1e-3, 0.5, 7.0, 1e4}) {
    ScalingResult s = r;
    for (double& x : s.x) x /= t;
    for (double& y : s.y) y *= t;
    for (const Edge& e : g.edges()) {
      const double a = r.x[e.left] * r.y[e.right];
      EXPECT_NEAR(s.x[e.left] * s.y[e.right], a, 1e-12 * a);
    }
    WeightVector wa = weights_from_scaling(r), wb = weights_from_scaling(s);
    for (std::size_t j = 0; j < wa.size(); ++j) EXPECT_NEAR(wa[j], wb[j], 1e-12 * wa[j]);
  }
}

TEST(VerifyScaling, DetectsBrokenColumn) {
  Instance g = gen_even_cycle(3);
  ScalingResult r = sinkhorn(g);
  EXPECT_TRUE(verify_scaling(g, r, 1e-6));
  r.y[0] *= 2.0;
  EXPECT_FALSE(verify_scaling(g, r, 1e-6));
}

TEST(Sinkhorn, RandomMatchingCoveredConverges) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 3 + seed % 38;
    Instance g = gen_random_mc(n, seed % (n * n - 2 * n + 1), seed);
    ScalingResult r = sinkhorn(g);
    ASSERT_EQ(r.status, ScalingStatus::converged) << "seed " << seed;
    EXPECT_LE(r.iterations, 100'000);
    EXPECT_TRUE(verify_scaling(g, r, 1e-6));
    for (std::size_t i = 0; i < g.left_count(); ++i) {
      double sum = 0.0;
      for (std::size_t e : g.left_edges(i)) sum += r.y[g.edges()[e].right];
      EXPECT_NEAR(r.x[i] * sum, static_cast<double>(g.supply(i)), 1e-6 * static_cast<double>(g.supply(i)));
    }
  }
}

// Both directions of the characterization at desk scale: the scaling
// iteration converges exactly when the exhaustive certificate holds.
TEST(Sinkhorn, ConvergesIffCertificateHolds) {
  Rng rng(41);
  int covered = 0, not_covered = 0;
  for (int k = 0; k < 120; ++k) {
    Instance g = testing::random_connected_perfect(rng, 1 + rng.below(6), 1 + rng.below(6), k % 2 == 0, 3, 0.3);
    const bool holds = oracle::scalability_certificate(g).holds;
    EXPECT_EQ(holds, is_matching_covered(g).covered);
    ScalingOptions opts;
    opts.max_iterations = 200'000;
    const ScalingResult r = sinkhorn(g, opts);
    EXPECT_EQ(r.status == ScalingStatus::converged, holds) << "case " << k;
    (holds ? covered : not_covered)++;
  }
  EXPECT_GT(covered, 10);
  EXPECT_GT(not_covered, 10);
}

TEST(WeightVector, RejectsNonPositive) {
  EXPECT_THROW(WeightVector({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(WeightVector({1.0, -2.0}), std::invalid_argument);
  EXPECT_THROW(WeightVector({1.0, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(WeightVector({1.0, INFINITY}), std::invalid_argument);
  WeightVector w({4.0, 2.0, 8.0});
  EXPECT_EQ(w.normalized()[0], 2.0);
  EXPECT_EQ(w.normalized()[1], 1.0);
}

}  // namespace
}  // namespace propalloc
