#pragma once

#include <array>
#include <vector>

#include "ceamp/graph.hpp"
#include "ceamp/variable_gadget.hpp"

namespace ceamp {

// Occurrence of a variable in a clause, reconstructed from vertex ids and
// graph structure alone: the literal position from which Q clique the
// transferring clique touches, the sign from which side of the gadget the
// transferring P3s end in.
struct OccurrenceInfo {
  int variable = 0;
  int clause = 0;
  int position = 0;  // 0,1,2 in literal order
  bool positive = true;
  int pi = 0;
  int t_clique = 0;
  std::array<int, 3> k_cliques{};  // K_{4pi}, K_{4pi+1}, K_{4pi+2}
};

struct ClauseStructure {
  int clause = 0;
  std::array<int, 4> q{};             // clique indices of Q^1..Q^4
  std::array<OccurrenceInfo, 3> occ;  // by literal position
};

// The formula-level shape of a reduced instance, recovered without any
// construction-side bookkeeping.
struct InstanceStructure {
  std::vector<VariableGadget> variables;  // index = variable
  std::vector<ClauseStructure> clauses;   // index = clause
};

InstanceStructure derive_structure(const Instance& inst);

// Clause literals in positional order as (variable, positive).
std::vector<std::array<std::pair<int, bool>, 3>> derived_clause_literals(
    const InstanceStructure& s);

}  // namespace ceamp
