#include <algorithm>
#include <stdexcept>
#include <string>

#include "propalloc/instance.hpp"
#include "propalloc/random.hpp"
#include "propalloc/structure.hpp"

namespace propalloc {

namespace {

std::string lid(std::size_t k) { return "i" + std::to_string(k + 1); }
std::string rid(std::size_t k) { return "j" + std::to_string(k + 1); }

Instance unit_instance(std::size_t left, std::size_t right, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  RawInstance raw;
  for (std::size_t i = 0; i < left; ++i) raw.left.push_back({lid(i), 1});
  for (std::size_t j = 0; j < right; ++j) raw.right.push_back({rid(j), 1});
  for (const Edge& e : edges) raw.edges.emplace_back(lid(e.left), rid(e.right));
  return validate(std::move(raw));
}

std::vector<Edge> cycle_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    edges.push_back({k, k});            // i_k - j_k
    edges.push_back({(k + 1) % n, k});  // j_k - i_{k+1}
  }
  return edges;
}

}  // namespace

Instance gen_path3() { return unit_instance(2, 2, {{0, 0}, {0, 1}, {1, 1}}); }

Instance gen_complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_complete: n must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.push_back({i, j});
  }
  return unit_instance(n, n, std::move(edges));
}

Instance gen_even_cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("gen_even_cycle: n must be at least 2");
  return unit_instance(n, n, cycle_edges(n));
}

Instance gen_random_mc(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random_mc: n must be at least 2");
  const std::vector<Edge> base = cycle_edges(n);
  std::vector<Edge> chords;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(base.begin(), base.end(), Edge{i, j}) == base.end()) chords.push_back({i, j});
    }
  }
  if (extra_edges > chords.size()) {
    throw std::invalid_argument("gen_random_mc: only " + std::to_string(chords.size()) +
                                " chords available");
  }

  Rng rng(seed);
  while (true) {
    // Partial Fisher-Yates: the first extra_edges entries are a uniform sample.
    std::vector<Edge> pool = chords;
    for (std::size_t k = 0; k < extra_edges; ++k) {
      std::swap(pool[k], pool[k + rng.below(pool.size() - k)]);
    }
    std::vector<Edge> edges = base;
    edges.insert(edges.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(extra_edges));
    Instance g = unit_instance(n, n, std::move(edges));
    if (is_matching_covered(g).covered) return g;
  }
}

}  // namespace propalloc
