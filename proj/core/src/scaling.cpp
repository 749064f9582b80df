#include "propalloc/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "propalloc/error.hpp"
#include "propalloc/flow.hpp"
#include "propalloc/structure.hpp"

namespace propalloc {

namespace {

bool all_positive_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a) && a > 0.0; });
}

double spread(std::span<const double> v) {
  if (v.empty()) return 1.0;
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

}  // namespace

WeightVector::WeightVector(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  for (double a : alpha_) {
    if (!std::isfinite(a) || a <= 0.0) {
      throw std::invalid_argument("weights must be strictly positive and finite");
    }
  }
}

WeightVector WeightVector::normalized() const {
  if (alpha_.empty()) return *this;
  const double lo = *std::min_element(alpha_.begin(), alpha_.end());
  std::vector<double> out(alpha_);
  for (double& a : out) a /= lo;
  return WeightVector(std::move(out));
}

std::string_view to_string(ScalingStatus status) {
  switch (status) {
    case ScalingStatus::converged:
      return "converged";
    case ScalingStatus::diverged:
      return "diverged";
    case ScalingStatus::iteration_cap:
      return "iteration_cap";
  }
  return "unknown";
}

double scaling_residual(const Instance& g, std::span<const double> x, std::span<const double> y) {
  std::vector<double> row(g.left_count(), 0.0);
  std::vector<double> col(g.right_count(), 0.0);
  for (const Edge& e : g.edges()) {
    const double entry = x[e.left] * y[e.right];
    row[e.left] += entry;
    col[e.right] += entry;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    worst = std::max(worst, std::abs(row[i] - static_cast<double>(g.supply(i))));
  }
  for (std::size_t j = 0; j < col.size(); ++j) {
    worst = std::max(worst, std::abs(col[j] - static_cast<double>(g.capacity(j))));
  }
  const double n = static_cast<double>(g.total_supply());
  return n > 0.0 ? worst / n : worst;
}

ScalingResult sinkhorn_from(const Instance& g, std::vector<double> initial_y,
                            const ScalingOptions& options) {
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (initial_y.size() != g.right_count() || !all_positive_finite(initial_y)) {
    throw std::invalid_argument("initial y must be positive per right node");
  }

  ScalingResult r;
  r.x.assign(g.left_count(), 1.0);
  r.y = std::move(initial_y);
  std::vector<double> acc;

  for (r.iterations = 0; r.iterations < options.max_iterations;) {
    acc.assign(g.left_count(), 0.0);
    for (const Edge& e : g.edges()) acc[e.left] += r.y[e.right];
    for (std::size_t i = 0; i < r.x.size(); ++i) r.x[i] = static_cast<double>(g.supply(i)) / acc[i];

    acc.assign(g.right_count(), 0.0);
    for (const Edge& e : g.edges()) acc[e.right] += r.x[e.left];
    for (std::size_t j = 0; j < r.y.size(); ++j) {
      r.y[j] = static_cast<double>(g.capacity(j)) / acc[j];
    }
    ++r.iterations;

    if (!all_positive_finite(r.x) || !all_positive_finite(r.y)) {
      r.residual = scaling_residual(g, r.x, r.y);
      r.status = ScalingStatus::diverged;
      return r;
    }
    r.residual = scaling_residual(g, r.x, r.y);
    if (spread(r.x) > options.divergence_ratio || spread(r.y) > options.divergence_ratio) {
      r.status = ScalingStatus::diverged;
      return r;
    }
    if (r.residual <= options.tolerance) {
      r.status = ScalingStatus::converged;
      return r;
    }
  }
  r.status = ScalingStatus::iteration_cap;
  return r;
}

ScalingResult sinkhorn(const Instance& g, const ScalingOptions& options) {
  if (!is_connected(g)) throw PreconditionError("instance is disconnected");
  if (!has_perfect_matching(g)) throw PreconditionError("no perfect matching");
  return sinkhorn_from(g, std::vector<double>(g.right_count(), 1.0), options);
}

ScalingResult sinkhorn(const Instance& g, double tolerance, std::int64_t max_iterations) {
  ScalingOptions options;
  options.tolerance = tolerance;
  options.max_iterations = max_iterations;
  return sinkhorn(g, options);
}

WeightVector weights_from_scaling(const ScalingResult& result) {
  if (result.status != ScalingStatus::converged) {
    throw PreconditionError("scaling did not converge");
  }
  return WeightVector(result.y).normalized();
}

bool verify_scaling(const Instance& g, const ScalingResult& result, double tolerance) {
  if (result.x.size() != g.left_count() || result.y.size() != g.right_count()) return false;
  std::vector<double> row(g.left_count(), 0.0);
  std::vector<double> col(g.right_count(), 0.0);
  for (const Edge& e : g.edges()) {
    const double entry = result.x[e.left] * result.y[e.right];
    row[e.left] += entry;
    col[e.right] += entry;
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!(std::abs(row[i] - static_cast<double>(g.supply(i))) <= tolerance)) return false;
  }
  for (std::size_t j = 0; j < col.size(); ++j) {
    if (!(std::abs(col[j] - static_cast<double>(g.capacity(j))) <= tolerance)) return false;
  }
  return true;
}

}  // namespace propalloc
