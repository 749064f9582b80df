#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "propalloc/instance.hpp"
#include "propalloc/scaling.hpp"

namespace propalloc {

/// Fractional assignment x_ij, one entry per instance edge (same order as
/// Instance::edges()).
struct Allocation {
  std::vector<double> x;
};

/// Rank r_j (1-based part index) and weight alpha_j per right node.
struct RankedStrategy {
  std::vector<std::size_t> ranks;
  WeightVector weights;
};

/// x_ij = S_i * alpha_j / sum_{a~i} alpha_a. Throws PreconditionError if a
/// left node has no neighbours.
Allocation proportional(const Instance& g, const WeightVector& alpha);

/// Proportional split restricted to the highest-ranked neighbours N_r(i).
/// All maximizers are kept.
Allocation ranked(const Instance& g, const RankedStrategy& strategy);

/// alloc(j) = sum_{i~j} x_ij.
double alloc_of(const Instance& g, const Allocation& x, std::size_t right);
double alloc_of(const Instance& g, const Allocation& x, std::string_view right_id);

/// val(x) = sum_j min(C_j, alloc(j)).
double allocation_value(const Instance& g, const Allocation& x);

/// Ranks from the Dulmage-Mendelsohn parts, weights from a perfect
/// proportional allocation of each part. Requires a connected instance with
/// a perfect assignment.
RankedStrategy perfect_strategy(const Instance& g, const ScalingOptions& options = {});

}  // namespace propalloc
