#include "propalloc/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "propalloc/error.hpp"

namespace propalloc {

namespace {

// Dinic's algorithm. Arcs are added in a fixed order, so the resulting
// flow is a deterministic function of the input order.
class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back({to, adj_[to].size(), cap});
    adj_[to].push_back({from, adj_[from].size() - 1, 0});
    arcs_.emplace_back(from, adj_[from].size() - 1);
    return arcs_.size() - 1;
  }

  std::int64_t run(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Flow currently on arc `id` (as returned by add_arc).
  std::int64_t flow(std::size_t id) const {
    const auto& [from, pos] = arcs_[id];
    const Arc& a = adj_[from][pos];
    return adj_[a.to][a.rev].cap;
  }

  std::vector<bool> reachable_from(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const Arc& a : adj_[u]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::int64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (const Arc& a : adj_[u]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t limit) {
    if (u == t) return limit;
    for (std::size_t& k = next_[u]; k < adj_[u].size(); ++k) {
      Arc& a = adj_[u][k];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(a.to, t, std::min(limit, a.cap))) {
        a.cap -= got;
        adj_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

FlowResult max_assignment(std::span<const std::int64_t> supply,
                          std::span<const std::int64_t> capacity, std::span<const Edge> edges) {
  const std::size_t L = supply.size();
  const std::size_t R = capacity.size();
  const std::size_t source = 0;
  const std::size_t sink = L + R + 1;
  Dinic net(L + R + 2);

  std::int64_t total_supply = 0;
  for (std::size_t i = 0; i < L; ++i) {
    net.add_arc(source, 1 + i, supply[i]);
    total_supply += supply[i];
  }
  std::vector<std::size_t> edge_arc;
  edge_arc.reserve(edges.size());
  for (const Edge& e : edges) {
    edge_arc.push_back(
        net.add_arc(1 + e.left, 1 + L + e.right, std::min(supply[e.left], capacity[e.right])));
  }
  for (std::size_t j = 0; j < R; ++j) net.add_arc(1 + L + j, sink, capacity[j]);

  FlowResult result;
  result.value = net.run(source, sink);
  result.edge_flows.reserve(edges.size());
  for (std::size_t id : edge_arc) result.edge_flows.push_back(net.flow(id));

  if (result.value < total_supply) {
    // Left side of a minimum cut. Every X -> unreached-j arc is saturated at
    // C_j (saturating at S_i would contradict i being reachable), so
    // C_{N(X)} <= cut contribution < S_X.
    auto seen = net.reachable_from(source);
    std::vector<std::size_t> witness;
    for (std::size_t i = 0; i < L; ++i) {
      if (seen[1 + i]) witness.push_back(i);
    }
    result.deficiency_witness = std::move(witness);
  }
  return result;
}

FlowResult max_matching_value(const Instance& g) {
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> capacity;
  for (const auto& n : g.left()) supply.push_back(n.supply);
  for (const auto& n : g.right()) capacity.push_back(n.capacity);
  return max_assignment(supply, capacity, g.edges());
}

bool has_perfect_matching(const Instance& g) {
  if (g.total_supply() != g.total_capacity()) return false;
  return max_matching_value(g).value == g.total_supply();
}

bool edge_in_some_perfect_assignment(const Instance& g, std::size_t edge) {
  if (edge >= g.edge_count()) throw std::out_of_range("edge index out of range");
  if (!has_perfect_matching(g)) throw PreconditionError("no perfect matching");

  // Force one unit onto the edge and ask whether the rest still fits. The
  // edge stays in the residual problem so it can carry further units.
  std::vector<std::int64_t> supply;
  std::vector<std::int64_t> capacity;
  for (const auto& n : g.left()) supply.push_back(n.supply);
  for (const auto& n : g.right()) capacity.push_back(n.capacity);
  const Edge e = g.edges()[edge];
  supply[e.left] -= 1;
  capacity[e.right] -= 1;
  return max_assignment(supply, capacity, g.edges()).value == g.total_supply() - 1;
}

}  // namespace propalloc
