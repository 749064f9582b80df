#include "propalloc/allocation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "propalloc/error.hpp"
#include "propalloc/structure.hpp"

namespace propalloc {

namespace {

void check_weights(const Instance& g, const WeightVector& alpha) {
  if (alpha.size() != g.right_count()) {
    throw std::invalid_argument("weight vector has " + std::to_string(alpha.size()) +
                                " entries for " + std::to_string(g.right_count()) +
                                " right nodes");
  }
}

void check_no_isolated_left(const Instance& g) {
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    if (g.left_edges(i).empty()) {
      throw PreconditionError("no neighbors to allocate to (left node '" + g.left()[i].id + "')");
    }
  }
}

}  // namespace

Allocation proportional(const Instance& g, const WeightVector& alpha) {
  check_weights(g, alpha);
  check_no_isolated_left(g);
  Allocation out{std::vector<double>(g.edge_count(), 0.0)};
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    double denom = 0.0;
    for (std::size_t e : g.left_edges(i)) denom += alpha[g.edges()[e].right];
    const double s = static_cast<double>(g.supply(i));
    for (std::size_t e : g.left_edges(i)) out.x[e] = s * alpha[g.edges()[e].right] / denom;
  }
  return out;
}

Allocation ranked(const Instance& g, const RankedStrategy& strategy) {
  check_weights(g, strategy.weights);
  if (strategy.ranks.size() != g.right_count()) {
    throw std::invalid_argument("rank vector size does not match right node count");
  }
  check_no_isolated_left(g);
  const auto& ranks = strategy.ranks;
  const auto& alpha = strategy.weights;
  Allocation out{std::vector<double>(g.edge_count(), 0.0)};
  for (std::size_t i = 0; i < g.left_count(); ++i) {
    std::size_t top = 0;
    for (std::size_t e : g.left_edges(i)) top = std::max(top, ranks[g.edges()[e].right]);
    double denom = 0.0;
    for (std::size_t e : g.left_edges(i)) {
      const std::size_t j = g.edges()[e].right;
      if (ranks[j] == top) denom += alpha[j];
    }
    const double s = static_cast<double>(g.supply(i));
    for (std::size_t e : g.left_edges(i)) {
      const std::size_t j = g.edges()[e].right;
      if (ranks[j] == top) out.x[e] = s * alpha[j] / denom;
    }
  }
  return out;
}

double alloc_of(const Instance& g, const Allocation& x, std::size_t right) {
  double total = 0.0;
  for (std::size_t e : g.right_edges(right)) total += x.x.at(e);
  return total;
}

double alloc_of(const Instance& g, const Allocation& x, std::string_view right_id) {
  auto j = g.find_right(right_id);
  if (!j) throw std::invalid_argument("unknown right node '" + std::string(right_id) + "'");
  return alloc_of(g, x, *j);
}

double allocation_value(const Instance& g, const Allocation& x) {
  if (x.x.size() != g.edge_count()) {
    throw std::invalid_argument("allocation size does not match edge count");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    total += std::min(static_cast<double>(g.capacity(j)), alloc_of(g, x, j));
  }
  return total;
}

RankedStrategy perfect_strategy(const Instance& g, const ScalingOptions& options) {
  const DmDecomposition dm = dm_decomposition(g);
  std::vector<std::size_t> ranks(g.right_count(), 0);
  std::vector<double> weights(g.right_count(), 1.0);
  for (std::size_t k = 0; k < dm.parts.size(); ++k) {
    const DmPart& part = dm.parts[k];
    for (std::size_t j : part.right) ranks[j] = k + 1;
    if (part.left.size() == 1 && part.right.size() == 1) continue;  // alpha = 1 suffices

    const Instance sub = induced_subinstance(g, part.left, part.right);
    const ScalingResult r = sinkhorn_from(sub, std::vector<double>(sub.right_count(), 1.0), options);
    if (r.status != ScalingStatus::converged) {
      throw InternalError("scaling failed on Dulmage-Mendelsohn part " + std::to_string(k + 1) +
                          " (" + std::string(to_string(r.status)) + ")");
    }
    const WeightVector alpha = weights_from_scaling(r);
    for (std::size_t t = 0; t < part.right.size(); ++t) weights[part.right[t]] = alpha[t];
  }
  return {std::move(ranks), WeightVector(std::move(weights))};
}

}  // namespace propalloc
