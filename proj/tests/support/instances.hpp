#pragma once

// Instance builders and random families shared by the unit and acceptance
// suites.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "propalloc/instance.hpp"
#include "propalloc/random.hpp"

namespace propalloc::testing {

/// Instance with ids i1.., j1.. from supplies, capacities and index edges.
Instance make_instance(const std::vector<std::int64_t>& supply,
                       const std::vector<std::int64_t>& capacity,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// K_{2,2} with S = (1, 2), C = (1, 2).
Instance weighted_k22();

/// Star: two unit left nodes joined to one right node of capacity 2.
Instance star2();

/// Two disjoint copies of K_{2,2}.
Instance two_squares();

/// Connected instance with a perfect assignment. Built from a random
/// spanning tree carrying positive integral flow (which defines S and C)
/// plus random extra edges. With `unit`, every supply and capacity is 1
/// and |I| = |J| = left.
Instance random_connected_perfect(Rng& rng, std::size_t left, std::size_t right, bool unit,
                                  std::int64_t max_flow_per_edge, double extra_edge_prob);

/// Random matching-covered blocks glued into one instance with edges only
/// from later blocks' left nodes to earlier blocks' right nodes, so the
/// block list is the decomposition. Blocks may be scaled so supplies and
/// capacities exceed 1. Returns the instance and the block count.
std::pair<Instance, std::size_t> chained_blocks(Rng& rng, std::size_t blocks,
                                                std::size_t max_block_n);

/// Every connected unit instance on n+n nodes whose edge set contains the
/// identity matching {(k, k)}.
std::vector<Instance> identity_supersets(std::size_t n);

}  // namespace propalloc::testing
