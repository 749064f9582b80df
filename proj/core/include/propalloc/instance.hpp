#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace propalloc {

/// Left-hand node (an item with integer supply S_i).
struct LeftNode {
  std::string id;
  std::int64_t supply = 0;

  friend bool operator==(const LeftNode&, const LeftNode&) = default;
};

/// Right-hand node (a bin with integer capacity C_j).
struct RightNode {
  std::string id;
  std::int64_t capacity = 0;

  friend bool operator==(const RightNode&, const RightNode&) = default;
};

/// Edge between left node `left` and right node `right`, by position.
struct Edge {
  std::size_t left = 0;
  std::size_t right = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unvalidated instance as read from a document: edges are id pairs.
struct RawInstance {
  std::vector<LeftNode> left;
  std::vector<RightNode> right;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Validated bipartite allocation instance. Immutable; node and edge order
/// follow the source document and drive every deterministic iteration in
/// the library.
class Instance {
 public:
  std::span<const LeftNode> left() const noexcept { return left_; }
  std::span<const RightNode> right() const noexcept { return right_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t left_count() const noexcept { return left_.size(); }
  std::size_t right_count() const noexcept { return right_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::int64_t supply(std::size_t i) const { return left_[i].supply; }
  std::int64_t capacity(std::size_t j) const { return right_[j].capacity; }
  std::int64_t total_supply() const noexcept { return total_supply_; }
  std::int64_t total_capacity() const noexcept { return total_capacity_; }

  /// Indices into edges() incident to a node, in document order.
  std::span<const std::size_t> left_edges(std::size_t i) const { return left_adj_[i]; }
  std::span<const std::size_t> right_edges(std::size_t j) const { return right_adj_[j]; }

  std::optional<std::size_t> find_left(std::string_view id) const;
  std::optional<std::size_t> find_right(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::size_t i, std::size_t j) const;

  RawInstance to_raw() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.edges_ == b.edges_;
  }

 private:
  friend Instance validate(RawInstance raw);

  Instance() = default;

  std::vector<LeftNode> left_;
  std::vector<RightNode> right_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> left_adj_;
  std::vector<std::vector<std::size_t>> right_adj_;
  std::unordered_map<std::string, std::size_t> left_index_;
  std::unordered_map<std::string, std::size_t> right_index_;
  std::int64_t total_supply_ = 0;
  std::int64_t total_capacity_ = 0;
};

/// Checks every invariant and either returns the instance or throws
/// ValidationError listing all violations.
Instance validate(RawInstance raw);

/// The sub-instance induced on the given left and right nodes. Nodes appear
/// in the order given; edges keep their order in `g`.
Instance induced_subinstance(const Instance& g, std::span<const std::size_t> lefts,
                             std::span<const std::size_t> rights);

// Generators. All emit edges sorted by (left index, right index).

/// Path on three edges i1-j1, i1-j2, i2-j2 with unit supplies and capacities.
Instance gen_path3();

/// K_{n,n} with unit supplies and capacities.
Instance gen_complete(std::size_t n);

/// Cycle i1-j1-i2-j2-...-in-jn-i1 with unit supplies and capacities; n >= 2.
Instance gen_even_cycle(std::size_t n);

/// Connected matching-covered unit instance: the even cycle on n pairs plus
/// `extra_edges` random chords, redrawn until the result is matching covered.
/// Deterministic in `seed`.
Instance gen_random_mc(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

}  // namespace propalloc
