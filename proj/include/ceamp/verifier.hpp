#pragma once

#include <string>
#include <vector>

#include "ceamp/graph.hpp"

namespace ceamp {

struct CheckResult {
  std::string check;
  bool pass = true;
  std::string witness;  // first violation, or a recorded value
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(const std::string& check) const;
};

std::string report_to_json(const Report& r);

// Packing validity: every packed triple is an induced P3 of the graph and
// no pair lies in two packed P3s.
Report verify_packing(const Instance& inst);

// Structural invariants of reduced instances: proto-clusters equal the
// declared cliques, the clique size table, exact pair coverage between
// model-adjacent cliques, dividing non-edges, level discipline, per-vertex
// incidence (recorded), and coverage of all inter-clique edges.
Report verify_structure(const Instance& inst);

// Solution validity at ell = 0.
Report verify_solution(const Instance& inst, const std::vector<Edit>& edits);

}  // namespace ceamp
