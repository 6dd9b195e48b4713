#include "ceamp/merging_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ceamp/check.hpp"

namespace ceamp {

bool MergingModel::adjacent(int a, int b) const {
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(std::min(a, b), std::max(a, b)));
}

std::vector<int> MergingModel::out_neighbors(int clique) const {
  std::vector<int> out;
  for (int n : adjacency[clique])
    if (level[n] < level[clique]) out.push_back(n);
  return out;
}

MergingModel build_merging_model(const InstanceStructure& s, int clique_count,
                                 const std::vector<int>& levels,
                                 const std::function<bool(int, int)>& cliques_adjacent) {
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) {
    require(a != b, "merging model self-loop");
    edges.emplace(std::min(a, b), std::max(a, b));
  };

  // variable cycles
  for (const VariableGadget& g : s.variables) {
    int n = (int)g.cliques.size();
    for (int j = 0; j < n; ++j) add(g.cliques[j], g.cliques[(j + 1) % n]);
  }
  // transferring cliques to their variable's clique triple
  for (const ClauseStructure& cs : s.clauses)
    for (const OccurrenceInfo& occ : cs.occ)
      for (int k : occ.k_cliques) add(occ.t_clique, k);
  // the five mergeable Q pairs
  for (const ClauseStructure& cs : s.clauses) {
    add(cs.q[0], cs.q[1]);
    add(cs.q[0], cs.q[2]);
    add(cs.q[1], cs.q[2]);
    add(cs.q[1], cs.q[3]);
    add(cs.q[2], cs.q[3]);
  }
  // transferring cliques to Q cliques, following graph adjacency; a clique
  // adjacent to Q^3 may also merge with Q^4
  for (const ClauseStructure& cs : s.clauses)
    for (const OccurrenceInfo& occ : cs.occ) {
      if (cliques_adjacent(occ.t_clique, cs.q[0])) add(occ.t_clique, cs.q[0]);
      if (cliques_adjacent(occ.t_clique, cs.q[3])) add(occ.t_clique, cs.q[3]);
      if (cliques_adjacent(occ.t_clique, cs.q[2])) {
        add(occ.t_clique, cs.q[2]);
        add(occ.t_clique, cs.q[3]);
      }
    }

  MergingModel mm;
  mm.clique_count = clique_count;
  mm.level = levels;
  mm.edges.assign(edges.begin(), edges.end());
  mm.adjacency.resize(clique_count);
  for (auto [a, b] : mm.edges) {
    mm.adjacency[a].push_back(b);
    mm.adjacency[b].push_back(a);
  }
  return mm;
}

MergingModel build_merging_model(const Instance& inst) {
  InstanceStructure s = derive_structure(inst);
  std::vector<std::vector<int>> members = inst.clique_members();
  auto adjacent = [&](int c1, int c2) {
    for (int u : members[c1])
      for (int v : members[c2])
        if (inst.graph.has_edge(u, v)) return true;
    return false;
  };
  return build_merging_model(s, (int)inst.cliques.size(), inst.clique_level, adjacent);
}

bool check_levels_acyclic(const MergingModel& mm) {
  for (auto [a, b] : mm.edges) {
    if (mm.level[a] == 0 && mm.level[b] == 0) continue;
    if (mm.level[a] == mm.level[b]) return false;
  }
  return true;
}

std::string model_to_dot(const MergingModel& mm, const std::vector<CliqueId>& ids) {
  std::ostringstream out;
  out << "graph merging_model {\n";
  for (int lvl = 0; lvl <= 4; ++lvl) {
    bool any = false;
    for (int c = 0; c < mm.clique_count; ++c) any |= mm.level[c] == lvl;
    if (!any) continue;
    out << "  { rank=same;";
    for (int c = 0; c < mm.clique_count; ++c)
      if (mm.level[c] == lvl) out << " \"" << ids[c].str() << "\";";
    out << " }\n";
  }
  for (auto [a, b] : mm.edges)
    out << "  \"" << ids[a].str() << "\" -- \"" << ids[b].str() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ceamp
