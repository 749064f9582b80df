#include <gtest/gtest.h>

#include "instances.hpp"
#include "propalloc/allocation.hpp"
#include "propalloc/error.hpp"
#include "propalloc/flow.hpp"
#include "propalloc/oracle.hpp"
#include "propalloc/structure.hpp"

namespace propalloc {
namespace {

using Ids = std::vector<std::size_t>;
using Counts = std::vector<std::int64_t>;

TEST(BruteHallSlack, Examples) {
  oracle::Certificate p = oracle::brute_hall_slack(gen_path3());
  EXPECT_FALSE(p.holds);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->left, Ids{1});
  EXPECT_TRUE(oracle::witness_is_genuine(gen_path3(), *p.witness, false));
  EXPECT_TRUE(oracle::brute_hall_slack(gen_even_cycle(3)).holds);
  EXPECT_TRUE(oracle::brute_hall_slack(gen_complete(2)).holds);
}

TEST(BruteHallSlack, SizeCap) {
  EXPECT_NO_THROW(oracle::brute_hall_slack(gen_even_cycle(20)));
  EXPECT_THROW(oracle::brute_hall_slack(gen_even_cycle(21)), PreconditionError);
}

TEST(EnumeratePerfect, Examples) {
  auto p = oracle::enumerate_perfect_assignments(gen_path3());
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0], (Counts{1, 0, 1}));  // edges i1j1, i1j2, i2j2
  EXPECT_EQ(oracle::enumerate_perfect_assignments(gen_even_cycle(3)).size(), 2u);
  EXPECT_EQ(oracle::enumerate_perfect_assignments(gen_complete(2)).size(), 2u);
  // Copies of a node are interchangeable: the star has one assignment.
  EXPECT_EQ(oracle::enumerate_perfect_assignments(testing::star2()).size(), 1u);
  EXPECT_THROW(oracle::enumerate_perfect_assignments(gen_complete(9)), PreconditionError);
  EXPECT_TRUE(oracle::enumerate_perfect_assignments(testing::make_instance({1}, {2}, {{0, 0}})).empty());
}

TEST(ScalabilityCertificate, Examples) {
  oracle::Certificate p = oracle::scalability_certificate(gen_path3());
  EXPECT_FALSE(p.holds);
  ASSERT_TRUE(p.witness);
  EXPECT_EQ(p.witness->kind, oracle::WitnessKind::independent_pair);
  EXPECT_EQ(p.witness->left, Ids{1});
  EXPECT_EQ(p.witness->right, Ids{0});
  EXPECT_TRUE(oracle::witness_is_genuine(gen_path3(), *p.witness, true));

  EXPECT_TRUE(oracle::scalability_certificate(gen_even_cycle(3)).holds);
  EXPECT_TRUE(oracle::scalability_certificate(testing::weighted_k22()).holds);

  oracle::Certificate t = oracle::scalability_certificate(testing::make_instance({1}, {2}, {{0, 0}}));
  EXPECT_FALSE(t.holds);
  EXPECT_EQ(t.witness->kind, oracle::WitnessKind::totals);
  EXPECT_THROW(oracle::scalability_certificate(gen_complete(13)), PreconditionError);
}

TEST(Oracles, CrossCheckWithWitnessSoundness) {
  Rng rng(57);
  for (int k = 0; k < 300; ++k) {
    Instance g = testing::random_connected_perfect(rng, 1 + rng.below(7), 1 + rng.below(7), k % 2 == 0, 3, 0.3);
    if (g.left_count() + g.right_count() > 14) continue;
    oracle::Certificate hall = oracle::brute_hall_slack(g);
    oracle::Certificate scal = oracle::scalability_certificate(g);
    ASSERT_EQ(hall.holds, scal.holds) << "case " << k;
    ASSERT_EQ(hall.holds, is_matching_covered(g).covered);
    if (!hall.holds) EXPECT_TRUE(oracle::witness_is_genuine(g, *hall.witness, false));
    if (!scal.holds) EXPECT_TRUE(oracle::witness_is_genuine(g, *scal.witness, true));
  }
}

TEST(WitnessCheck, RejectsFakeWitnesses) {
  Instance hex = gen_even_cycle(3);
  EXPECT_FALSE(oracle::witness_is_genuine(hex, {oracle::WitnessKind::hall_subset, {0}, {}}, false));
  EXPECT_FALSE(oracle::witness_is_genuine(hex, {oracle::WitnessKind::independent_pair, {0}, {0}}, true));
  EXPECT_FALSE(oracle::witness_is_genuine(hex, {oracle::WitnessKind::totals, {}, {}}, true));
}

TEST(BestProportionalSearch, Path3StaysBelowTwo) {
  Instance g = gen_path3();
  oracle::SearchResult r = oracle::best_proportional_search(g, 10'000, 1);
  EXPECT_LT(r.best_value, 2.0);
  EXPECT_GT(r.best_value, 1.99);
  // Closed form: val = 1 + a1 / (a1 + a2).
  const double a1 = r.best_weights[0], a2 = r.best_weights[1];
  EXPECT_NEAR(r.best_value, 1.0 + a1 / (a1 + a2), 1e-15);
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const double b1 = rng.log_uniform(1e-6, 1e6), b2 = rng.log_uniform(1e-6, 1e6);
    const double v = allocation_value(g, proportional(g, WeightVector({b1, b2})));
    EXPECT_NEAR(v, 1.0 + b1 / (b1 + b2), 1e-14);
    EXPECT_LT(v, 2.0);
  }
}

TEST(BestProportionalSearch, HexagonFindsOpt) {
  EXPECT_DOUBLE_EQ(oracle::best_proportional_search(gen_even_cycle(3), 0, 1).best_value, 3.0);
  EXPECT_DOUBLE_EQ(oracle::best_proportional_search(gen_even_cycle(3), 50, 9).best_value, 3.0);
}

}  // namespace
}  // namespace propalloc
