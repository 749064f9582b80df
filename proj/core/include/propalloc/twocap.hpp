#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "propalloc/instance.hpp"
#include "propalloc/scaling.hpp"

namespace propalloc {

/// Item with weight c_i and volume v_i.
struct TwoCapItem {
  std::string id;
  double weight = 0.0;
  double volume = 0.0;

  friend bool operator==(const TwoCapItem&, const TwoCapItem&) = default;
};

/// Bin with weight capacity C_j and volume capacity V_j.
struct TwoCapBin {
  std::string id;
  double weight_capacity = 0.0;
  double volume_capacity = 0.0;

  friend bool operator==(const TwoCapBin&, const TwoCapBin&) = default;
};

struct RawTwoCapInstance {
  std::vector<TwoCapItem> items;
  std::vector<TwoCapBin> bins;
  std::vector<std::pair<std::string, std::string>> edges;
};

class TwoCapInstance {
 public:
  const std::vector<TwoCapItem>& items() const noexcept { return items_; }
  const std::vector<TwoCapBin>& bins() const noexcept { return bins_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& item_edges(std::size_t i) const { return item_adj_[i]; }

  RawTwoCapInstance to_raw() const;

  friend bool operator==(const TwoCapInstance& a, const TwoCapInstance& b) {
    return a.items_ == b.items_ && a.bins_ == b.bins_ && a.edges_ == b.edges_;
  }

 private:
  friend TwoCapInstance validate_twocap(RawTwoCapInstance raw);

  std::vector<TwoCapItem> items_;
  std::vector<TwoCapBin> bins_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> item_adj_;
};

/// Throws ValidationError listing every violation: non-positive or
/// non-finite quantities, dangling endpoints, duplicate ids or edges.
TwoCapInstance validate_twocap(RawTwoCapInstance raw);

/// K_{n,n} with c_i = C_i = 2^{i-1} and v_i = V_i = 2^{n-i}; 2 <= n <= 60.
TwoCapInstance gen_powers(std::size_t n);

/// Item k placed wholly in bin k satisfies both capacities for every k.
/// Requires a square complete instance.
bool diagonal_feasible(const TwoCapInstance& g);

struct TwoCapLoads {
  std::vector<double> weight;  // per bin
  std::vector<double> volume;  // per bin
};

/// Each item spreads its weight and volume over its neighbours in
/// proportion to alpha.
TwoCapLoads proportional_twocap(const TwoCapInstance& g, const WeightVector& alpha);

enum class CapacityKind { weight, volume };

struct ViolationReport {
  double factor = 0.0;
  std::size_t argmax_bin = 0;
  CapacityKind argmax_kind = CapacityKind::weight;
};

/// Largest load/capacity ratio over bins and both kinds. Ties go to the
/// earlier bin, and to weight before volume within a bin.
ViolationReport violation_factor(const TwoCapInstance& g, const WeightVector& alpha);

/// 2^{n/2 - 1} / n for even n >= 2.
double lower_bound(std::size_t n);

}  // namespace propalloc
