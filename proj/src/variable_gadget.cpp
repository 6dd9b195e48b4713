#include "ceamp/variable_gadget.hpp"

#include "ceamp/check.hpp"
#include "ceamp/ffield.hpp"

namespace ceamp {

VariableGadget build_variable_gadget(InstanceBuilder& b, int variable, int occurrences) {
  require(occurrences >= 2, "variable x" + std::to_string(variable) +
                                " occurs fewer than twice; normalize the formula first");
  VariableGadget g;
  g.variable = variable;
  int cliques = 4 * occurrences;
  for (int j = 0; j < cliques; ++j) {
    int c = b.add_clique(var_clique(variable, j), 0);
    g.cliques.push_back(c);
    for (int p = 0; p < 5; ++p) b.add_vertex(var_vertex(variable, j, p), c);
  }
  // K_{4m} is identified with K_0
  auto vert = [&](int j, int p) { return b.vertex(var_vertex(variable, j % cliques, p)); };
  for (int j = 0; j < cliques; j += 2) {
    // K_{j+1} becomes fully adjacent to K_j and to K_{j+2}
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < 5; ++q) {
        b.add_edge(vert(j, p), vert(j + 1, q));
        b.add_edge(vert(j + 1, p), vert(j + 2, q));
      }
    // one P3 per arithmetic progression (p, q, 2q - p) over F_5
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < 5; ++q) {
        int r = progression_third(f_make(p, 5), f_make(q, 5)).value;
        b.add_p3(vert(j, p), vert(j + 1, q), vert(j + 2, r), P3Role::var);
      }
  }
  return g;
}

std::vector<std::pair<int, int>> truth_pairs(const VariableGadget& g, bool value) {
  std::vector<std::pair<int, int>> out;
  int n = (int)g.cliques.size();
  for (int j = 0; j < n; j += 2) {
    if (value)
      out.emplace_back(g.cliques[(j + 1) % n], g.cliques[(j + 2) % n]);
    else
      out.emplace_back(g.cliques[j], g.cliques[j + 1]);
  }
  return out;
}

}  // namespace ceamp
