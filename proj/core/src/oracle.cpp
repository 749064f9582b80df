#include "propalloc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "propalloc/allocation.hpp"
#include "propalloc/error.hpp"
#include "propalloc/random.hpp"

namespace propalloc::oracle {

namespace {

using Mask = std::uint64_t;

std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; m != 0; ++k, m >>= 1) {
    if (m & 1) out.push_back(k);
  }
  return out;
}

// Neighbourhood of each left node as a bitmask over right nodes.
std::vector<Mask> left_neighbour_masks(const Instance& g) {
  std::vector<Mask> nbr(g.left_count(), 0);
  for (const Edge& e : g.edges()) nbr[e.left] |= Mask{1} << e.right;
  return nbr;
}

std::int64_t sum_supply(const Instance& g, Mask m) {
  std::int64_t s = 0;
  for (std::size_t i : bits_of(m)) s += g.supply(i);
  return s;
}

std::int64_t sum_capacity(const Instance& g, Mask m) {
  std::int64_t s = 0;
  for (std::size_t j : bits_of(m)) s += g.capacity(j);
  return s;
}

}  // namespace

Certificate brute_hall_slack(const Instance& g) {
  const std::size_t L = g.left_count();
  if (L > kMaxHallLeft) {
    throw PreconditionError("brute_hall_slack: |I| = " + std::to_string(L) + " exceeds " +
                            std::to_string(kMaxHallLeft));
  }
  if (g.right_count() > 63) throw PreconditionError("brute_hall_slack: |J| exceeds 63");
  const auto nbr = left_neighbour_masks(g);
  const Mask full = (Mask{1} << L) - 1;
  for (Mask x = 1; x < full; ++x) {
    Mask n = 0;
    for (std::size_t i : bits_of(x)) n |= nbr[i];
    if (sum_capacity(g, n) <= sum_supply(g, x)) {
      return {false, Witness{WitnessKind::hall_subset, bits_of(x), bits_of(n)}};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::vector<std::int64_t>> enumerate_perfect_assignments(const Instance& g) {
  if (g.total_supply() > kMaxEnumerationSupply) {
    throw PreconditionError("enumerate_perfect_assignments: S_I exceeds " +
                            std::to_string(kMaxEnumerationSupply));
  }
  if (g.total_supply() != g.total_capacity()) return {};

  // Unit expansion.
  std::vector<std::size_t> left_owner;
  std::vector<std::size_t> right_owner;
  for (std::size_t i = 0; i < g.left_count(); ++i) left_owner.insert(left_owner.end(), g.supply(i), i);
  for (std::size_t j = 0; j < g.right_count(); ++j) {
    right_owner.insert(right_owner.end(), g.capacity(j), j);
  }
  std::vector<std::vector<std::size_t>> edge_of(g.left_count(),
                                                std::vector<std::size_t>(g.right_count(), SIZE_MAX));
  for (std::size_t e = 0; e < g.edge_count(); ++e) edge_of[g.edges()[e].left][g.edges()[e].right] = e;

  std::set<std::vector<std::int64_t>> found;
  std::vector<bool> used(right_owner.size(), false);
  std::vector<std::int64_t> counts(g.edge_count(), 0);

  // Match left copy `a` to every free adjacent right copy in turn.
  std::function<void(std::size_t)> match = [&](std::size_t a) {
    if (a == left_owner.size()) {
      found.insert(counts);
      return;
    }
    for (std::size_t b = 0; b < right_owner.size(); ++b) {
      if (used[b]) continue;
      const std::size_t e = edge_of[left_owner[a]][right_owner[b]];
      if (e == SIZE_MAX) continue;
      used[b] = true;
      ++counts[e];
      match(a + 1);
      --counts[e];
      used[b] = false;
    }
  };
  match(0);
  return {found.begin(), found.end()};
}

Certificate scalability_certificate(const Instance& g) {
  const std::size_t L = g.left_count();
  const std::size_t R = g.right_count();
  if (L + R > kMaxScalabilityNodes) {
    throw PreconditionError("scalability_certificate: |I| + |J| exceeds " +
                            std::to_string(kMaxScalabilityNodes));
  }
  const std::int64_t n = g.total_supply();
  if (n != g.total_capacity()) return {false, Witness{WitnessKind::totals, {}, {}}};

  const auto nbr = left_neighbour_masks(g);
  const Mask left_full = (Mask{1} << L) - 1;
  const Mask right_full = (Mask{1} << R) - 1;
  for (Mask x = 0; x <= left_full; ++x) {
    Mask nx = 0;
    for (std::size_t i : bits_of(x)) nx |= nbr[i];
    const Mask free = right_full & ~nx;
    const std::int64_t sx = sum_supply(g, x);
    // Submasks of `free` in increasing order.
    Mask y = 0;
    while (true) {
      const std::int64_t total = sx + sum_capacity(g, y);
      bool bad = total > n;
      if (!bad && total == n) {
        // Equality requires A[I\X, J\Y] = 0.
        for (std::size_t i : bits_of(left_full & ~x)) {
          if (nbr[i] & ~y & right_full) {
            bad = true;
            break;
          }
        }
      }
      if (bad) return {false, Witness{WitnessKind::independent_pair, bits_of(x), bits_of(y)}};
      if (y == free) break;
      y = (y - free) & free;
    }
  }
  return {true, std::nullopt};
}

SearchResult best_proportional_search(const Instance& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t R = g.right_count();
  SearchResult best{-1.0, {}};
  auto consider = [&](WeightVector alpha) {
    const double v = allocation_value(g, proportional(g, alpha));
    if (v > best.best_value) best = {v, std::move(alpha)};
  };
  consider(WeightVector::uniform(R));
  std::vector<double> caps;
  for (const auto& node : g.right()) caps.push_back(static_cast<double>(node.capacity));
  consider(WeightVector(std::move(caps)));

  Rng rng(seed);
  std::vector<double> alpha(R);
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& a : alpha) a = rng.log_uniform(1e-6, 1e6);
    consider(WeightVector(alpha));
  }
  return best;
}

bool witness_is_genuine(const Instance& g, const Witness& w, bool for_scalability) {
  std::vector<bool> in_x(g.left_count(), false);
  std::vector<bool> in_y(g.right_count(), false);
  std::int64_t sx = 0;
  std::int64_t cy = 0;
  for (std::size_t i : w.left) {
    in_x.at(i) = true;
    sx += g.supply(i);
  }
  for (std::size_t j : w.right) {
    in_y.at(j) = true;
    cy += g.capacity(j);
  }

  switch (w.kind) {
    case WitnessKind::totals:
      return g.total_supply() != g.total_capacity();
    case WitnessKind::hall_subset: {
      if (for_scalability) return false;
      if (w.left.empty() || w.left.size() == g.left_count()) return false;
      std::vector<bool> in_n(g.right_count(), false);
      for (const Edge& e : g.edges()) {
        if (in_x[e.left]) in_n[e.right] = true;
      }
      std::int64_t cn = 0;
      for (std::size_t j = 0; j < g.right_count(); ++j) {
        if (in_n[j]) cn += g.capacity(j);
      }
      return cn <= sx;
    }
    case WitnessKind::independent_pair: {
      if (!for_scalability) return false;
      bool crossing_rest = false;
      for (const Edge& e : g.edges()) {
        if (in_x[e.left] && in_y[e.right]) return false;  // not independent
        if (!in_x[e.left] && !in_y[e.right]) crossing_rest = true;
      }
      const std::int64_t n = g.total_supply();
      return sx + cy > n || (sx + cy == n && crossing_rest);
    }
  }
  return false;
}

}  // namespace propalloc::oracle
