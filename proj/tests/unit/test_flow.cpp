#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "instances.hpp"
#include "propalloc/error.hpp"
#include "propalloc/flow.hpp"
#include "propalloc/oracle.hpp"

namespace propalloc {
namespace {

using testing::make_instance;

// Exhaustive maximum: every unit of supply either goes to a neighbour with
// room left or is dropped.
std::int64_t brute_max_value(const Instance& g) {
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < g.left_count(); ++i) units.insert(units.end(), g.supply(i), i);
  std::vector<std::int64_t> room;
  for (const auto& n : g.right()) room.push_back(n.capacity);
  std::int64_t best = 0;
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t k, std::int64_t placed) {
    if (placed + static_cast<std::int64_t>(units.size() - k) <= best) return;
    if (k == units.size()) {
      best = std::max(best, placed);
      return;
    }
    for (std::size_t e : g.left_edges(units[k])) {
      const std::size_t j = g.edges()[e].right;
      if (room[j] == 0) continue;
      --room[j];
      go(k + 1, placed + 1);
      ++room[j];
    }
    go(k + 1, placed);
  };
  go(0, 0);
  return best;
}

void expect_flow_contract(const Instance& g, const FlowResult& r) {
  std::vector<std::int64_t> out(g.left_count(), 0), in(g.right_count(), 0);
  std::int64_t total = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ASSERT_GE(r.edge_flows[e], 0);
    out[g.edges()[e].left] += r.edge_flows[e];
    in[g.edges()[e].right] += r.edge_flows[e];
    total += r.edge_flows[e];
  }
  for (std::size_t i = 0; i < g.left_count(); ++i) EXPECT_LE(out[i], g.supply(i));
  for (std::size_t j = 0; j < g.right_count(); ++j) EXPECT_LE(in[j], g.capacity(j));
  EXPECT_EQ(total, r.value);
  EXPECT_LE(r.value, std::min(g.total_supply(), g.total_capacity()));
  EXPECT_EQ(r.deficiency_witness.has_value(), r.value < g.total_supply());
  if (r.deficiency_witness) {
    std::set<std::size_t> nbrs;
    std::int64_t sx = 0;
    for (std::size_t i : *r.deficiency_witness) {
      sx += g.supply(i);
      for (std::size_t e : g.left_edges(i)) nbrs.insert(g.edges()[e].right);
    }
    std::int64_t cn = 0;
    for (std::size_t j : nbrs) cn += g.capacity(j);
    EXPECT_LT(cn, sx);
  }
}

TEST(MaxMatching, Examples) {
  EXPECT_EQ(max_matching_value(gen_path3()).value, 2);
  EXPECT_EQ(max_matching_value(gen_complete(3)).value, 3);
  EXPECT_EQ(max_matching_value(testing::star2()).value, 2);
}

TEST(MaxMatching, DeficiencyWitness) {
  // i1 (supply 2) only reaches j1 (capacity 1).
  Instance g = make_instance({2, 1}, {1, 5}, {{0, 0}, {1, 1}});
  FlowResult r = max_matching_value(g);
  EXPECT_EQ(r.value, 2);
  ASSERT_TRUE(r.deficiency_witness);
  EXPECT_EQ(*r.deficiency_witness, std::vector<std::size_t>{0});
  expect_flow_contract(g, r);
}

TEST(MaxMatching, AgreesWithBruteForce) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    // Arbitrary (not necessarily perfect) small instances.
    const std::size_t L = 1 + rng.below(4);
    const std::size_t R = 1 + rng.below(4);
    std::vector<std::int64_t> s(L), c(R);
    std::int64_t total = 0;
    for (auto& v : s) total += (v = 1 + static_cast<std::int64_t>(rng.below(2)));
    for (auto& v : c) v = 1 + static_cast<std::int64_t>(rng.below(3));
    if (total > 8) continue;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = 0; j < R; ++j) {
        if (rng.uniform01() < 0.45) edges.push_back({i, j});
      }
    }
    Instance g = make_instance(s, c, edges);
    FlowResult r = max_matching_value(g);
    ASSERT_EQ(r.value, brute_max_value(g)) << k;
    expect_flow_contract(g, r);
  }
}

TEST(PerfectMatching, Examples) {
  EXPECT_TRUE(has_perfect_matching(gen_path3()));
  EXPECT_FALSE(has_perfect_matching(make_instance({1, 1}, {1, 2}, {{0, 0}, {0, 1}, {1, 1}})));
  EXPECT_FALSE(has_perfect_matching(make_instance({1}, {1}, {})));
}

TEST(EdgeMembership, Examples) {
  Instance p = gen_path3();
  EXPECT_TRUE(edge_in_some_perfect_assignment(p, *p.find_edge(0, 0)));
  EXPECT_FALSE(edge_in_some_perfect_assignment(p, *p.find_edge(0, 1)));
  Instance hex = gen_even_cycle(3);
  for (std::size_t e = 0; e < hex.edge_count(); ++e) EXPECT_TRUE(edge_in_some_perfect_assignment(hex, e));
}

TEST(EdgeMembership, RequiresPerfectMatching) {
  Instance g = make_instance({1, 1}, {1, 1}, {{0, 0}, {1, 0}});
  EXPECT_THROW(edge_in_some_perfect_assignment(g, 0), PreconditionError);
}

TEST(EdgeMembership, EdgeCarryingSeveralUnits) {
  // The only perfect assignment puts both units on the single edge.
  Instance g = make_instance({2}, {2}, {{0, 0}});
  EXPECT_TRUE(edge_in_some_perfect_assignment(g, 0));
}

TEST(EdgeMembership, AgreesWithEnumeration) {
  Rng rng(17);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const bool unit = rng.below(2) == 0;
    Instance g = testing::random_connected_perfect(rng, 1 + rng.below(4), 1 + rng.below(4), unit, 2, 0.4);
    if (g.total_supply() > oracle::kMaxEnumerationSupply) continue;
    auto all = oracle::enumerate_perfect_assignments(g);
    ASSERT_FALSE(all.empty());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      bool used = std::any_of(all.begin(), all.end(), [&](const auto& a) { return a[e] > 0; });
      ASSERT_EQ(edge_in_some_perfect_assignment(g, e), used) << "case " << k << " edge " << e;
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace propalloc
