#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "propalloc/instance.hpp"

namespace propalloc {

struct DmPart {
  std::vector<std::size_t> left;   // X_k, document order
  std::vector<std::size_t> right;  // Y_k, document order
};

/// Dulmage-Mendelsohn decomposition of an instance with a perfect
/// assignment. parts[0] is the first part (k = 1). Every edge between parts
/// runs from a left node in a later part to a right node in an earlier one.
struct DmDecomposition {
  std::vector<DmPart> parts;
  std::vector<std::size_t> left_part;   // part index (0-based) of each left node
  std::vector<std::size_t> right_part;  // part index (0-based) of each right node
};

struct McVerdict {
  bool covered = false;
  /// Nonempty proper X with C_{N(X)} = S_X, when connected and not covered.
  std::optional<std::vector<std::size_t>> tight_set;
  bool disconnected = false;
};

/// Unit expansion: each left node i becomes S_i copies, each right node j
/// becomes C_j copies. Copies are numbered left copies first, then right,
/// both in document order.
struct UnitExpansion {
  std::size_t left_units = 0;
  std::size_t right_units = 0;
  std::vector<std::size_t> left_owner;   // copy -> original left node
  std::vector<std::size_t> right_owner;  // copy -> original right node
};

bool is_connected(const Instance& g);

/// Requires a perfect assignment (throws PreconditionError otherwise).
/// Covered iff connected and the decomposition has a single part; the
/// tight-set witness is X_1.
McVerdict is_matching_covered(const Instance& g);

/// Requires a connected instance with a perfect assignment.
DmDecomposition dm_decomposition(const Instance& g);

/// Contracts an SCC labelling of the unit expansion back to the original
/// nodes. `left_component`/`right_component` give the SCC of each copy;
/// SCC ids are already the part indices. Throws InternalError if copies of
/// one node land in different SCCs or a part lacks a left or right node.
DmDecomposition project_check(const UnitExpansion& expansion,
                              std::span<const std::size_t> left_component,
                              std::span<const std::size_t> right_component,
                              std::size_t component_count, std::size_t left_count,
                              std::size_t right_count);

/// Upper bound on expansion arcs accepted by dm_decomposition.
inline constexpr std::size_t kMaxExpansionArcs = 50'000'000;

}  // namespace propalloc
