#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "propalloc/instance.hpp"
#include "propalloc/scaling.hpp"

// Exponential-time exhaustive checkers. They share no code path with the
// polynomial algorithms they are used to verify.
namespace propalloc::oracle {

enum class WitnessKind {
  hall_subset,       // X with C_{N(X)} <= S_X
  independent_pair,  // X, Y with no edge between them violating the scaling condition
  totals,            // S_I != C_J
};

struct Witness {
  WitnessKind kind = WitnessKind::hall_subset;
  std::vector<std::size_t> left;   // X
  std::vector<std::size_t> right;  // Y for independent_pair, N(X) for hall_subset
};

struct Certificate {
  bool holds = false;
  std::optional<Witness> witness;
};

inline constexpr std::size_t kMaxHallLeft = 20;
inline constexpr std::int64_t kMaxEnumerationSupply = 8;
inline constexpr std::size_t kMaxScalabilityNodes = 24;

/// Holds iff C_{N(X)} > S_X for every nonempty X strictly inside I. The
/// witness is the first X (by bitmask order) that fails. |I| <= 20.
Certificate brute_hall_slack(const Instance& g);

/// Every integral assignment that places all supply and fills all capacity,
/// as per-edge unit counts, sorted and without duplicates. S_I <= 8.
std::vector<std::vector<std::int64_t>> enumerate_perfect_assignments(const Instance& g);

/// Exhaustive check of the (S, C)-scalability condition for the incidence
/// matrix: S_X + C_Y <= n over every independent pair, with equality only
/// if no edge joins I\X to J\Y. |I| + |J| <= 24.
Certificate scalability_certificate(const Instance& g);

struct SearchResult {
  double best_value = 0.0;
  WeightVector best_weights;
};

/// Best val(proportional(alpha)) over the uniform vector, alpha_j = C_j, and
/// `samples` log-uniform vectors with entries in [1e-6, 1e6].
SearchResult best_proportional_search(const Instance& g, std::size_t samples, std::uint64_t seed);

/// Recomputes a witness by direct arithmetic; true iff it is a genuine
/// violation of the property its certificate denies.
bool witness_is_genuine(const Instance& g, const Witness& w, bool for_scalability);

}  // namespace propalloc::oracle
