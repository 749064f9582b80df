#include "propalloc/twocap.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "propalloc/error.hpp"

namespace propalloc {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

RawTwoCapInstance TwoCapInstance::to_raw() const {
  RawTwoCapInstance raw{items_, bins_, {}};
  for (const Edge& e : edges_) raw.edges.emplace_back(items_[e.left].id, bins_[e.right].id);
  return raw;
}

TwoCapInstance validate_twocap(RawTwoCapInstance raw) {
  std::vector<std::string> issues;
  std::unordered_map<std::string, std::size_t> item_index;
  std::unordered_map<std::string, std::size_t> bin_index;
  for (std::size_t i = 0; i < raw.items.size(); ++i) {
    const auto& it = raw.items[i];
    if (!positive(it.weight)) issues.push_back("non-positive weight on item '" + it.id + "'");
    if (!positive(it.volume)) issues.push_back("non-positive volume on item '" + it.id + "'");
    if (!item_index.emplace(it.id, i).second) issues.push_back("duplicate item id '" + it.id + "'");
  }
  for (std::size_t j = 0; j < raw.bins.size(); ++j) {
    const auto& b = raw.bins[j];
    if (!positive(b.weight_capacity)) {
      issues.push_back("non-positive weight capacity on bin '" + b.id + "'");
    }
    if (!positive(b.volume_capacity)) {
      issues.push_back("non-positive volume capacity on bin '" + b.id + "'");
    }
    if (!bin_index.emplace(b.id, j).second) issues.push_back("duplicate bin id '" + b.id + "'");
  }

  TwoCapInstance g;
  std::set<Edge> seen;
  for (const auto& [iid, bid] : raw.edges) {
    auto i = item_index.find(iid);
    auto j = bin_index.find(bid);
    if (i == item_index.end() || j == bin_index.end()) {
      issues.push_back("dangling endpoint in edge ('" + iid + "', '" + bid + "')");
      continue;
    }
    Edge e{i->second, j->second};
    if (!seen.insert(e).second) {
      issues.push_back("duplicate edge ('" + iid + "', '" + bid + "')");
      continue;
    }
    g.edges_.push_back(e);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  g.items_ = std::move(raw.items);
  g.bins_ = std::move(raw.bins);
  g.item_adj_.assign(g.items_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) g.item_adj_[g.edges_[e].left].push_back(e);
  return g;
}

TwoCapInstance gen_powers(std::size_t n) {
  if (n < 2 || n > 60) throw std::invalid_argument("gen_powers: n must be in [2, 60]");
  RawTwoCapInstance raw;
  for (std::size_t k = 1; k <= n; ++k) {
    const double low = std::ldexp(1.0, static_cast<int>(k - 1));
    const double high = std::ldexp(1.0, static_cast<int>(n - k));
    raw.items.push_back({"i" + std::to_string(k), low, high});
    raw.bins.push_back({"j" + std::to_string(k), low, high});
  }
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      raw.edges.emplace_back("i" + std::to_string(a), "j" + std::to_string(b));
    }
  }
  return validate_twocap(std::move(raw));
}

bool diagonal_feasible(const TwoCapInstance& g) {
  const std::size_t n = g.items().size();
  if (g.bins().size() != n || g.edges().size() != n * n) {
    throw std::invalid_argument("diagonal_feasible requires a square complete instance");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& item = g.items()[k];
    const auto& bin = g.bins()[k];
    if (item.weight > bin.weight_capacity || item.volume > bin.volume_capacity) return false;
  }
  return true;
}

TwoCapLoads proportional_twocap(const TwoCapInstance& g, const WeightVector& alpha) {
  if (alpha.size() != g.bins().size()) {
    throw std::invalid_argument("weight vector size does not match bin count");
  }
  TwoCapLoads loads{std::vector<double>(g.bins().size(), 0.0),
                    std::vector<double>(g.bins().size(), 0.0)};
  for (std::size_t i = 0; i < g.items().size(); ++i) {
    const auto& adj = g.item_edges(i);
    if (adj.empty()) {
      throw PreconditionError("no neighbors to allocate to (item '" + g.items()[i].id + "')");
    }
    double denom = 0.0;
    for (std::size_t e : adj) denom += alpha[g.edges()[e].right];
    for (std::size_t e : adj) {
      const std::size_t j = g.edges()[e].right;
      const double share = alpha[j] / denom;
      loads.weight[j] += g.items()[i].weight * share;
      loads.volume[j] += g.items()[i].volume * share;
    }
  }
  return loads;
}

ViolationReport violation_factor(const TwoCapInstance& g, const WeightVector& alpha) {
  const TwoCapLoads loads = proportional_twocap(g, alpha);
  ViolationReport report;
  bool first = true;
  for (std::size_t j = 0; j < g.bins().size(); ++j) {
    const double w = loads.weight[j] / g.bins()[j].weight_capacity;
    const double v = loads.volume[j] / g.bins()[j].volume_capacity;
    if (first || w > report.factor) report = {w, j, CapacityKind::weight};
    first = false;
    if (v > report.factor) report = {v, j, CapacityKind::volume};
  }
  return report;
}

double lower_bound(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("lower_bound: n must be even and >= 2");
  return std::ldexp(1.0, static_cast<int>(n / 2) - 1) / static_cast<double>(n);
}

}  // namespace propalloc
