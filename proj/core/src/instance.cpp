#include "propalloc/instance.hpp"

#include <limits>
#include <set>

#include "propalloc/error.hpp"

namespace propalloc {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out = "invalid instance:";
  for (const auto& issue : issues) {
    out += "\n  ";
    out += issue;
  }
  return out;
}

bool add_checked(std::int64_t& total, std::int64_t v) {
  if (v > 0 && total > std::numeric_limits<std::int64_t>::max() - v) return false;
  total += v;
  return true;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::invalid_argument(join_issues(issues)), issues_(std::move(issues)) {}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(offset == npos ? what : what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

std::optional<std::size_t> Instance::find_left(std::string_view id) const {
  auto it = left_index_.find(std::string(id));
  if (it == left_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::find_right(std::string_view id) const {
  auto it = right_index_.find(std::string(id));
  if (it == right_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::find_edge(std::size_t i, std::size_t j) const {
  for (std::size_t e : left_adj_.at(i)) {
    if (edges_[e].right == j) return e;
  }
  return std::nullopt;
}

RawInstance Instance::to_raw() const {
  RawInstance raw{left_, right_, {}};
  raw.edges.reserve(edges_.size());
  for (const Edge& e : edges_) raw.edges.emplace_back(left_[e.left].id, right_[e.right].id);
  return raw;
}

Instance validate(RawInstance raw) {
  std::vector<std::string> issues;
  Instance g;

  for (std::size_t i = 0; i < raw.left.size(); ++i) {
    const LeftNode& node = raw.left[i];
    if (node.supply < 1) {
      issues.push_back("non-positive supply " + std::to_string(node.supply) + " on left node '" +
                       node.id + "'");
    }
    if (!g.left_index_.emplace(node.id, i).second) {
      issues.push_back("duplicate id '" + node.id + "' among left nodes");
    }
    if (!add_checked(g.total_supply_, node.supply)) issues.push_back("total supply overflows int64");
  }
  for (std::size_t j = 0; j < raw.right.size(); ++j) {
    const RightNode& node = raw.right[j];
    if (node.capacity < 1) {
      issues.push_back("non-positive capacity " + std::to_string(node.capacity) +
                       " on right node '" + node.id + "'");
    }
    if (!g.right_index_.emplace(node.id, j).second) {
      issues.push_back("duplicate id '" + node.id + "' among right nodes");
    }
    if (!add_checked(g.total_capacity_, node.capacity)) {
      issues.push_back("total capacity overflows int64");
    }
  }

  std::set<Edge> seen;
  for (const auto& [lid, rid] : raw.edges) {
    auto li = g.left_index_.find(lid);
    auto rj = g.right_index_.find(rid);
    const bool left_ok = li != g.left_index_.end();
    const bool right_ok = rj != g.right_index_.end();
    if (!left_ok || !right_ok) {
      // Distinguish a same-side edge from a reference to a nonexistent node.
      if (!left_ok && g.right_index_.count(lid) && right_ok) {
        issues.push_back("right-right edge ('" + lid + "', '" + rid + "')");
      } else if (left_ok && !right_ok && g.left_index_.count(rid)) {
        issues.push_back("left-left edge ('" + lid + "', '" + rid + "')");
      } else {
        issues.push_back("dangling endpoint in edge ('" + lid + "', '" + rid + "')");
      }
      continue;
    }
    Edge e{li->second, rj->second};
    if (!seen.insert(e).second) {
      issues.push_back("duplicate edge ('" + lid + "', '" + rid + "')");
      continue;
    }
    g.edges_.push_back(e);
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));

  g.left_ = std::move(raw.left);
  g.right_ = std::move(raw.right);
  g.left_adj_.assign(g.left_.size(), {});
  g.right_adj_.assign(g.right_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.left_adj_[g.edges_[e].left].push_back(e);
    g.right_adj_[g.edges_[e].right].push_back(e);
  }
  return g;
}

Instance induced_subinstance(const Instance& g, std::span<const std::size_t> lefts,
                             std::span<const std::size_t> rights) {
  RawInstance raw;
  std::vector<bool> keep_left(g.left_count(), false);
  std::vector<bool> keep_right(g.right_count(), false);
  for (std::size_t i : lefts) {
    keep_left.at(i) = true;
    raw.left.push_back(g.left()[i]);
  }
  for (std::size_t j : rights) {
    keep_right.at(j) = true;
    raw.right.push_back(g.right()[j]);
  }
  for (const Edge& e : g.edges()) {
    if (keep_left[e.left] && keep_right[e.right]) {
      raw.edges.emplace_back(g.left()[e.left].id, g.right()[e.right].id);
    }
  }
  return validate(std::move(raw));
}

}  // namespace propalloc
