#include "ceamp/structure.hpp"

#include <algorithm>
#include <map>

#include "ceamp/check.hpp"

namespace ceamp {

InstanceStructure derive_structure(const Instance& inst) {
  InstanceStructure s;
  std::map<int, std::vector<std::pair<int, int>>> var_cliques;   // i -> (j, clique)
  std::map<int, std::map<int, int>> clause_q;                    // d -> k -> clique
  std::map<int, std::vector<std::pair<int, int>>> var_transfer;  // i -> (d, clique)

  for (int c = 0; c < (int)inst.cliques.size(); ++c) {
    const CliqueId& id = inst.cliques[c];
    switch (id.kind) {
      case CliqueKind::var: var_cliques[id.a].emplace_back(id.b, c); break;
      case CliqueKind::clause: clause_q[id.a][id.b] = c; break;
      case CliqueKind::transfer: var_transfer[id.b].emplace_back(id.a, c); break;
      case CliqueKind::plain: break;
    }
  }

  int variable_count = var_cliques.empty() ? 0 : var_cliques.rbegin()->first + 1;
  int clause_count = clause_q.empty() ? 0 : clause_q.rbegin()->first + 1;
  s.variables.resize(variable_count);
  s.clauses.resize(clause_count);

  for (auto& [i, list] : var_cliques) {
    std::sort(list.begin(), list.end());
    require((int)list.size() % 4 == 0 && (int)list.size() >= 8,
            "variable x" + std::to_string(i) + " has a malformed gadget");
    VariableGadget& g = s.variables[i];
    g.variable = i;
    for (int j = 0; j < (int)list.size(); ++j) {
      require(list[j].first == j, "variable gadget clique indices not contiguous");
      g.cliques.push_back(list[j].second);
    }
  }
  for (int i = 0; i < variable_count; ++i)
    require(!s.variables[i].cliques.empty(), "variable x" + std::to_string(i) + " has no gadget");

  // any edge between two cliques, via the vertex lists
  std::vector<std::vector<int>> members = inst.clique_members();
  auto adjacent = [&](int c1, int c2) {
    for (int u : members[c1])
      for (int v : members[c2])
        if (inst.graph.has_edge(u, v)) return true;
    return false;
  };

  for (auto& [d, qmap] : clause_q) {
    ClauseStructure& cs = s.clauses[d];
    cs.clause = d;
    require(qmap.size() == 4, "clause " + std::to_string(d) + " is missing Q cliques");
    for (int k = 1; k <= 4; ++k) {
      require(qmap.count(k), "clause " + std::to_string(d) + " is missing Q^" + std::to_string(k));
      cs.q[k - 1] = qmap[k];
    }
  }

  for (auto& [i, list] : var_transfer) {
    std::sort(list.begin(), list.end());
    for (int pi = 0; pi < (int)list.size(); ++pi) {
      auto [d, tc] = list[pi];
      require(d >= 0 && d < clause_count, "transferring clique for an unknown clause");
      OccurrenceInfo occ;
      occ.variable = i;
      occ.clause = d;
      occ.pi = pi;
      occ.t_clique = tc;
      const VariableGadget& g = s.variables[i];
      require(4 * pi + 2 < (int)g.cliques.size(), "occurrence count exceeds gadget size");
      occ.k_cliques = {g.cliques[4 * pi], g.cliques[4 * pi + 1], g.cliques[4 * pi + 2]};

      const ClauseStructure& cs = s.clauses[d];
      bool a1 = adjacent(tc, cs.q[0]), a3 = adjacent(tc, cs.q[2]), a4 = adjacent(tc, cs.q[3]);
      int position;
      if (a1 && !a3)
        position = 0;
      else if (a3)
        position = 1;
      else if (a4)
        position = 2;
      else
        throw std::runtime_error("transferring clique touches no anchor Q clique");
      occ.position = position;

      // sign: the connection P3s run from T through K_{4pi+1} and end in
      // K_{4pi+2} when the literal is positive, in K_{4pi} otherwise
      int ends_lo = 0, ends_hi = 0;
      for (const PackedP3& p : inst.packing) {
        if (p.role != P3Role::tra) continue;
        int cx = inst.vertex_clique[p.x], cy = inst.vertex_clique[p.y],
            cz = inst.vertex_clique[p.z];
        if (cy != occ.k_cliques[1]) continue;
        int other_vertex = -1;
        if (cx == tc) other_vertex = p.z;
        else if (cz == tc) other_vertex = p.x;
        else continue;
        int oc = inst.vertex_clique[other_vertex];
        if (oc == occ.k_cliques[0]) ++ends_lo;
        if (oc == occ.k_cliques[2]) ++ends_hi;
      }
      require(ends_lo + ends_hi == 4 && (ends_lo == 0 || ends_hi == 0),
              "malformed connection P3s for T" + inst.cliques[tc].str());
      occ.positive = ends_hi == 4;

      ClauseStructure& cs_mut = s.clauses[d];
      cs_mut.occ[position] = occ;
    }
  }

  // every clause must have exactly one occurrence per literal position
  for (const ClauseStructure& cs : s.clauses) {
    std::array<int, 3> count{};
    for (int pos = 0; pos < 3; ++pos) ++count[cs.occ[pos].position];
    require(count[0] == 1 && count[1] == 1 && count[2] == 1,
            "clause " + std::to_string(cs.clause) + " has malformed literal positions");
  }
  return s;
}

std::vector<std::array<std::pair<int, bool>, 3>> derived_clause_literals(
    const InstanceStructure& s) {
  std::vector<std::array<std::pair<int, bool>, 3>> out;
  for (const ClauseStructure& cs : s.clauses) {
    std::array<std::pair<int, bool>, 3> lits;
    for (int pos = 0; pos < 3; ++pos)
      lits[pos] = {cs.occ[pos].variable, cs.occ[pos].positive};
    out.push_back(lits);
  }
  return out;
}

}  // namespace ceamp
