#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "propalloc/instance.hpp"

namespace propalloc {

struct FlowResult {
  /// OPT: the maximum integral assignment of supply respecting capacities.
  std::int64_t value = 0;
  /// Integral flow per edge, indexed like Instance::edges().
  std::vector<std::int64_t> edge_flows;
  /// Left nodes X with C_{N(X)} < S_X; present iff value < S_I.
  std::optional<std::vector<std::size_t>> deficiency_witness;
};

/// Maximum integral assignment via max-flow on
/// source -> i (S_i) -> j (min(S_i, C_j)) -> sink (C_j).
FlowResult max_matching_value(const Instance& g);

/// Same computation over raw arrays. Supplies and capacities may be zero,
/// which the validated Instance forbids; used for residual subproblems.
FlowResult max_assignment(std::span<const std::int64_t> supply,
                          std::span<const std::int64_t> capacity, std::span<const Edge> edges);

/// True iff S_I == C_J and the maximum assignment places all supply.
bool has_perfect_matching(const Instance& g);

/// True iff some perfect integral assignment puts at least one unit on the
/// edge. Throws PreconditionError("no perfect matching") when the instance
/// has none.
bool edge_in_some_perfect_assignment(const Instance& g, std::size_t edge);

}  // namespace propalloc
