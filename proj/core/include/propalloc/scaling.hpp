#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "propalloc/instance.hpp"

namespace propalloc {

/// Positive finite weight per right node (alpha_j). Construction rejects
/// zero, negative and non-finite entries. Values are kept as given;
/// normalized() rescales so the smallest entry is 1.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> alpha);

  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0)); }

  std::span<const double> values() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return alpha_.size(); }
  double operator[](std::size_t j) const { return alpha_[j]; }

  WeightVector normalized() const;

 private:
  std::vector<double> alpha_;
};

enum class ScalingStatus { converged, diverged, iteration_cap };

std::string_view to_string(ScalingStatus status);

struct ScalingOptions {
  double tolerance = 1e-9;
  std::int64_t max_iterations = 1'000'000;
  /// Declare divergence once max/min of x or of y exceeds this ratio.
  double divergence_ratio = 1e15;
};

struct ScalingResult {
  std::vector<double> x;  // per left node
  std::vector<double> y;  // per right node
  double residual = 0.0;
  std::int64_t iterations = 0;
  ScalingStatus status = ScalingStatus::iteration_cap;
};

/// Alternating (S, C)-scaling of the 0/1 incidence matrix, starting from
/// x = y = 1. One iteration sets x_i = S_i / sum_{j~i} y_j and then
/// y_j = C_j / sum_{i~j} x_i. The residual is the largest absolute row or
/// column sum error divided by S_I.
///
/// Requires a connected instance with a perfect assignment.
ScalingResult sinkhorn(const Instance& g, const ScalingOptions& options = {});
ScalingResult sinkhorn(const Instance& g, double tolerance, std::int64_t max_iterations);

/// Same iteration from a caller-supplied starting y (size right_count(),
/// positive). Preconditions are not rechecked.
ScalingResult sinkhorn_from(const Instance& g, std::vector<double> initial_y,
                            const ScalingOptions& options = {});

/// Residual of an arbitrary (x, y) pair under the same definition.
double scaling_residual(const Instance& g, std::span<const double> x, std::span<const double> y);

/// alpha = y, normalized to min entry 1. Throws PreconditionError unless
/// the result converged.
WeightVector weights_from_scaling(const ScalingResult& result);

/// Every row sum of A_ij x_i y_j within `tolerance` of S_i and every column
/// sum within `tolerance` of C_j.
bool verify_scaling(const Instance& g, const ScalingResult& result, double tolerance);

}  // namespace propalloc
