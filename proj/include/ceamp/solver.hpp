#pragma once

#include <optional>
#include <vector>

#include "ceamp/graph.hpp"

namespace ceamp {

enum class SolveStatus { feasible, infeasible, timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<Edit> edits;  // witness when feasible
};

// Exact decision for |S| = |H|: backtracking over merge/divide choices for
// clique pairs that share a covered pair, with unit propagation on the
// one-edit-per-P3 budgets and on dividing non-edges. Deterministic branch
// order (canonical pair order, merge before divide); the witness is
// re-verified before it is returned.
SolveResult solve_zero_excess(const Instance& inst,
                              std::optional<double> time_limit_seconds = std::nullopt);

// Oracle: enumerate every partition of the proto-clusters of (g, h) and
// take the cheapest. Feasible iff the minimum equals |h|. Refuses more
// than 12 proto-clusters.
std::optional<std::vector<Edit>> brute_force_partition_solve(const Graph& g,
                                                             const std::vector<PackedP3>& h);

// Oracle: minimum cluster editing set by enumerating all vertex
// partitions; returned iff its size is at most budget. Refuses more than
// 12 vertices.
std::optional<std::vector<Edit>> brute_force_cluster_editing(const Graph& g, int budget);

}  // namespace ceamp
