#include "propalloc/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "propalloc/error.hpp"
#include "propalloc/flow.hpp"

namespace propalloc {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

// Directed graph D on the unit expansion: every left copy points at every
// copy of each neighbouring right node, and every right copy points back at
// the left copy it is matched to. Adjacency is generated on the fly.
class MatchedDigraph {
 public:
  MatchedDigraph(const Instance& g, const FlowResult& flow) : g_(g) {
    left_first_.resize(g.left_count() + 1, 0);
    right_first_.resize(g.right_count() + 1, 0);
    for (std::size_t i = 0; i < g.left_count(); ++i) {
      left_first_[i + 1] = left_first_[i] + static_cast<std::size_t>(g.supply(i));
    }
    for (std::size_t j = 0; j < g.right_count(); ++j) {
      right_first_[j + 1] = right_first_[j] + static_cast<std::size_t>(g.capacity(j));
    }
    expansion_.left_units = left_first_.back();
    expansion_.right_units = right_first_.back();
    for (std::size_t i = 0; i < g.left_count(); ++i) {
      expansion_.left_owner.insert(expansion_.left_owner.end(), g.supply(i), i);
    }
    for (std::size_t j = 0; j < g.right_count(); ++j) {
      expansion_.right_owner.insert(expansion_.right_owner.end(), g.capacity(j), j);
    }

    // Fix the perfect matching M: walk edges in document order and pair off
    // the next unused copies on each side.
    right_mate_.assign(expansion_.right_units, 0);
    std::vector<std::size_t> left_used(g.left_count(), 0);
    std::vector<std::size_t> right_used(g.right_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge edge = g.edges()[e];
      for (std::int64_t u = 0; u < flow.edge_flows[e]; ++u) {
        std::size_t a = left_first_[edge.left] + left_used[edge.left]++;
        std::size_t b = right_first_[edge.right] + right_used[edge.right]++;
        right_mate_[b] = a;
      }
    }
  }

  std::size_t node_count() const { return expansion_.left_units + expansion_.right_units; }
  const UnitExpansion& expansion() const { return expansion_; }

  // Cursor over the out-arcs of one node.
  struct Cursor {
    std::size_t edge_pos = 0;
    std::size_t copy = 0;
  };

  // Advances the cursor and returns the next successor, or nullopt.
  std::optional<std::size_t> next(std::size_t v, Cursor& c) const {
    const std::size_t L = expansion_.left_units;
    if (v >= L) {
      if (c.edge_pos++ == 0) return right_mate_[v - L];
      return std::nullopt;
    }
    const std::size_t i = expansion_.left_owner[v];
    const auto edges = g_.left_edges(i);
    while (c.edge_pos < edges.size()) {
      const std::size_t j = g_.edges()[edges[c.edge_pos]].right;
      const std::size_t width = right_first_[j + 1] - right_first_[j];
      if (c.copy < width) return L + right_first_[j] + c.copy++;
      ++c.edge_pos;
      c.copy = 0;
    }
    return std::nullopt;
  }

 private:
  const Instance& g_;
  UnitExpansion expansion_;
  std::vector<std::size_t> left_first_;
  std::vector<std::size_t> right_first_;
  std::vector<std::size_t> right_mate_;
};

// Iterative Tarjan. Components are numbered in completion order, which is a
// reverse topological order of the condensation: an arc from component p to
// component q != p implies p > q.
std::vector<std::size_t> tarjan(const MatchedDigraph& d, std::size_t& count) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  const std::size_t n = d.node_count();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, MatchedDigraph::Cursor>> frames;
  std::size_t counter = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, {}});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, cursor] = frames.back();
      if (auto w = d.next(v, cursor)) {
        if (index[*w] == kUnvisited) {
          index[*w] = low[*w] = counter++;
          stack.push_back(*w);
          on_stack[*w] = true;
          frames.push_back({*w, {}});
        } else if (on_stack[*w]) {
          low[v] = std::min(low[v], index[*w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

bool is_connected(const Instance& g) {
  const std::size_t L = g.left_count();
  const std::size_t n = L + g.right_count();
  if (n <= 1) return true;
  DisjointSets sets(n);
  std::size_t components = n;
  for (const Edge& e : g.edges()) {
    if (sets.unite(e.left, L + e.right)) --components;
  }
  return components == 1;
}

DmDecomposition project_check(const UnitExpansion& expansion,
                              std::span<const std::size_t> left_component,
                              std::span<const std::size_t> right_component,
                              std::size_t component_count, std::size_t left_count,
                              std::size_t right_count) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  if (left_component.size() != expansion.left_units ||
      right_component.size() != expansion.right_units) {
    throw InternalError("project_check: component labelling does not match expansion size");
  }
  DmDecomposition dm;
  dm.left_part.assign(left_count, kUnset);
  dm.right_part.assign(right_count, kUnset);

  auto assign = [&](std::vector<std::size_t>& part_of, std::size_t node, std::size_t comp,
                    const char* side) {
    if (comp >= component_count) {
      throw InternalError("project_check: component id out of range");
    }
    if (part_of[node] == kUnset) {
      part_of[node] = comp;
    } else if (part_of[node] != comp) {
      throw InternalError(std::string("project_check: copies of ") + side + " node " +
                          std::to_string(node) + " split across strongly connected components");
    }
  };
  for (std::size_t a = 0; a < expansion.left_units; ++a) {
    assign(dm.left_part, expansion.left_owner[a], left_component[a], "left");
  }
  for (std::size_t b = 0; b < expansion.right_units; ++b) {
    assign(dm.right_part, expansion.right_owner[b], right_component[b], "right");
  }

  dm.parts.resize(component_count);
  for (std::size_t i = 0; i < left_count; ++i) {
    if (dm.left_part[i] == kUnset) throw InternalError("project_check: left node has no copies");
    dm.parts[dm.left_part[i]].left.push_back(i);
  }
  for (std::size_t j = 0; j < right_count; ++j) {
    if (dm.right_part[j] == kUnset) throw InternalError("project_check: right node has no copies");
    dm.parts[dm.right_part[j]].right.push_back(j);
  }
  for (const DmPart& part : dm.parts) {
    if (part.left.empty() || part.right.empty()) {
      throw InternalError("project_check: part without both left and right nodes");
    }
  }
  return dm;
}

DmDecomposition dm_decomposition(const Instance& g) {
  if (!is_connected(g)) throw PreconditionError("instance is disconnected");
  FlowResult flow = max_matching_value(g);
  if (g.total_supply() != g.total_capacity() || flow.value != g.total_supply()) {
    throw PreconditionError("no perfect matching");
  }

  std::size_t arcs = 0;
  for (const Edge& e : g.edges()) {
    const auto s = static_cast<std::size_t>(g.supply(e.left));
    const auto c = static_cast<std::size_t>(g.capacity(e.right));
    if (c != 0 && s > kMaxExpansionArcs / c) throw PreconditionError("unit expansion too large");
    arcs += s * c;
    if (arcs > kMaxExpansionArcs) throw PreconditionError("unit expansion too large");
  }

  MatchedDigraph d(g, flow);
  std::size_t count = 0;
  std::vector<std::size_t> comp = tarjan(d, count);
  const std::size_t L = d.expansion().left_units;
  std::span<const std::size_t> all(comp);
  return project_check(d.expansion(), all.first(L), all.subspan(L), count, g.left_count(),
                       g.right_count());
}

McVerdict is_matching_covered(const Instance& g) {
  if (!has_perfect_matching(g)) throw PreconditionError("no perfect matching");
  McVerdict verdict;
  if (!is_connected(g)) {
    verdict.disconnected = true;
    return verdict;
  }
  DmDecomposition dm = dm_decomposition(g);
  if (dm.parts.size() == 1) {
    verdict.covered = true;
  } else {
    verdict.tight_set = dm.parts.front().left;
  }
  return verdict;
}

}  // namespace propalloc
