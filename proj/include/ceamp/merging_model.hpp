#pragma once

#include <functional>
#include <vector>

#include "ceamp/structure.hpp"

namespace ceamp {

// Auxiliary graph over the construction's cliques: an edge marks a clique
// pair a solution may merge. Levels stratify the padding order.
struct MergingModel {
  int clique_count = 0;
  std::vector<std::pair<int, int>> edges;     // canonical (a < b), sorted
  std::vector<std::vector<int>> adjacency;    // per clique
  std::vector<int> level;                     // per clique

  bool adjacent(int a, int b) const;
  // adjacent cliques of strictly lower level
  std::vector<int> out_neighbors(int clique) const;
};

// Shared edge rules. The adjacency predicate answers "is there any edge of
// G between these two cliques"; it is the only part that inspects the graph.
MergingModel build_merging_model(const InstanceStructure& s, int clique_count,
                                 const std::vector<int>& levels,
                                 const std::function<bool(int, int)>& cliques_adjacent);

// Re-derivation from a frozen instance (verifier entry point).
MergingModel build_merging_model(const Instance& inst);

// True iff every edge not internal to level 0 joins two distinct levels,
// which makes the high-to-low orientation acyclic outside level 0.
bool check_levels_acyclic(const MergingModel& mm);

// DOT export with one rank per level.
std::string model_to_dot(const MergingModel& mm, const std::vector<CliqueId>& ids);

}  // namespace ceamp
