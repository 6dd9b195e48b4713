#pragma once

#include <utility>
#include <vector>

#include "ceamp/builder.hpp"

namespace ceamp {

// Cyclic gadget of a variable: 4*m five-vertex cliques K^i_0..K^i_{4m-1}
// linked by arithmetic-progression P3s over F_5. The clique list is in
// cyclic j order; indices may live in a builder or a frozen instance.
struct VariableGadget {
  int variable = 0;
  std::vector<int> cliques;
  int occurrence_count() const { return (int)cliques.size() / 4; }
};

VariableGadget build_variable_gadget(InstanceBuilder& b, int variable, int occurrences);

// Consecutive clique pairs to merge for the given truth value:
// false merges even pairs (K_j, K_{j+1}) with j even, true the odd ones.
std::vector<std::pair<int, int>> truth_pairs(const VariableGadget& g, bool value);

}  // namespace ceamp
