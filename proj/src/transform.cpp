#include "ceamp/transform.hpp"

#include <algorithm>
#include <numeric>

#include "ceamp/check.hpp"
#include "ceamp/structure.hpp"
#include "ceamp/verifier.hpp"

namespace ceamp {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

Formula derived_formula(const InstanceStructure& s) {
  Formula f;
  f.variable_count = (int)s.variables.size();
  for (const auto& lits : derived_clause_literals(s)) {
    Clause c;
    for (auto [var, positive] : lits) c.literals.push_back(Literal{var, positive});
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace

std::vector<Edit> encode_solution(const Instance& inst, const Assignment& a) {
  InstanceStructure s = derive_structure(inst);
  Formula f = derived_formula(s);
  require(satisfies(f, a), "assignment does not satisfy the encoded formula");

  UnionFind uf((int)inst.cliques.size());
  for (const VariableGadget& g : s.variables)
    for (auto [c1, c2] : truth_pairs(g, a.values[g.variable])) uf.unite(c1, c2);

  for (const ClauseStructure& cs : s.clauses) {
    int chosen = -1;
    for (int pos = 0; pos < 3 && chosen < 0; ++pos)
      if (a.values[cs.occ[pos].variable] == cs.occ[pos].positive) chosen = pos;
    require(chosen >= 0, "satisfying assignment leaves a clause unsatisfied");

    switch (chosen) {
      case 0:  // T^p joins Q1; Q2, Q3, Q4 merge
        uf.unite(cs.occ[0].t_clique, cs.q[0]);
        uf.unite(cs.q[1], cs.q[2]);
        uf.unite(cs.q[2], cs.q[3]);
        break;
      case 1:  // Q1 joins Q2; T^q, Q3, Q4 merge
        uf.unite(cs.q[0], cs.q[1]);
        uf.unite(cs.occ[1].t_clique, cs.q[2]);
        uf.unite(cs.q[2], cs.q[3]);
        break;
      case 2:  // T^r joins Q4; Q1, Q2, Q3 merge
        uf.unite(cs.occ[2].t_clique, cs.q[3]);
        uf.unite(cs.q[0], cs.q[1]);
        uf.unite(cs.q[1], cs.q[2]);
        break;
    }
    for (int pos = 0; pos < 3; ++pos) {
      if (pos == chosen) continue;
      const OccurrenceInfo& occ = cs.occ[pos];
      // true: join the cluster of {K_{4pi+1}, K_{4pi+2}}; false: of
      // {K_{4pi}, K_{4pi+1}} -- the parity merge above already linked them
      uf.unite(occ.t_clique, occ.k_cliques[1]);
      uf.unite(occ.t_clique, a.values[occ.variable] ? occ.k_cliques[2] : occ.k_cliques[0]);
    }
  }

  // S: edges between clusters plus non-edges inside clusters
  std::vector<Edit> edits;
  for (auto [u, v] : inst.graph.sorted_edges())
    if (uf.find(inst.vertex_clique[u]) != uf.find(inst.vertex_clique[v]))
      edits.push_back(Edit{u, v, false});
  std::vector<std::vector<int>> cluster_members((int)inst.cliques.size());
  for (int v = 0; v < (int)inst.vertices.size(); ++v)
    cluster_members[uf.find(inst.vertex_clique[v])].push_back(v);
  for (const std::vector<int>& block : cluster_members)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!inst.graph.has_edge(block[i], block[j]))
          edits.push_back(Edit{std::min(block[i], block[j]), std::max(block[i], block[j]), true});
  sort_edits(edits);

  Report check = verify_solution(inst, edits);
  if (!check.all_pass()) {
    std::string detail;
    for (const CheckResult& c : check.checks)
      if (!c.pass) { detail = c.check + ": " + c.witness; break; }
    throw std::runtime_error("encoded solution failed verification: " + detail);
  }
  return edits;
}

Assignment decode_assignment(const Instance& inst, const std::vector<Edit>& edits) {
  require(edits.size() == inst.packing.size(),
          "|S| = " + std::to_string(edits.size()) + " but |H| = " +
              std::to_string(inst.packing.size()) + "; not a zero-excess solution");
  Graph edited = apply_edits(inst.graph, edits);
  require(is_cluster_graph(edited), "edit set does not produce a cluster graph");

  std::vector<int> comp = connected_components(edited);
  std::vector<int> clique_cluster(inst.cliques.size(), -1);
  for (int v = 0; v < (int)inst.vertices.size(); ++v) {
    int c = inst.vertex_clique[v];
    if (clique_cluster[c] < 0) clique_cluster[c] = comp[v];
    require(clique_cluster[c] == comp[v],
            "cluster is not a union of cliques: " + inst.cliques[c].str() + " is split");
  }

  InstanceStructure s = derive_structure(inst);
  Assignment a;
  a.values.resize(s.variables.size());
  for (const VariableGadget& g : s.variables) {
    bool evens_merged = true, odds_merged = true, evens_divided = true, odds_divided = true;
    int n = (int)g.cliques.size();
    for (int j = 0; j < n; ++j) {
      bool merged = clique_cluster[g.cliques[j]] == clique_cluster[g.cliques[(j + 1) % n]];
      (j % 2 == 0 ? evens_merged : odds_merged) &= merged;
      (j % 2 == 0 ? evens_divided : odds_divided) &= !merged;
    }
    bool encodes_false = evens_merged && odds_divided;
    bool encodes_true = odds_merged && evens_divided;
    require(encodes_false != encodes_true,
            "variable x" + std::to_string(g.variable) +
                ": gadget parities are mixed; the certificate is corrupt");
    a.values[g.variable] = encodes_true;
  }

  require(satisfies(derived_formula(s), a),
          "decoded assignment does not satisfy the formula; instance or solution corrupt");
  return a;
}

}  // namespace ceamp
