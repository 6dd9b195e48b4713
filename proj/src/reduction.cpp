#include "ceamp/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ceamp/builder.hpp"
#include "ceamp/check.hpp"
#include "ceamp/clause_gadget.hpp"
#include "ceamp/padding.hpp"
#include "ceamp/variable_gadget.hpp"

namespace ceamp {

ReducedInstance reduce(const Formula& f) {
  require(is_conforming(f), "formula is not conforming; normalize it first");
  InstanceBuilder b;

  std::vector<VariableGadget> gadgets;
  for (int i = 0; i < f.variable_count; ++i)
    gadgets.push_back(build_variable_gadget(b, i, (int)clauses_containing(f, i).size()));

  std::vector<ClauseSkeleton> skeletons;
  for (int d = 0; d < (int)f.clauses.size(); ++d) {
    const Clause& c = f.clauses[d];
    skeletons.push_back(build_clause_skeleton(
        b, d, {c.literals[0].variable, c.literals[1].variable, c.literals[2].variable}));
  }
  for (int d = 0; d < (int)f.clauses.size(); ++d)
    for (int pos = 0; pos < 3; ++pos) {
      const Literal& lit = f.clauses[d].literals[pos];
      connect_to_variable(b, skeletons[d], pos, occurrence_index(f, lit.variable, d),
                          lit.positive);
    }

  // merging model from the construction's own bookkeeping
  InstanceStructure s;
  s.variables = gadgets;
  for (int d = 0; d < (int)f.clauses.size(); ++d) {
    ClauseStructure cs;
    cs.clause = d;
    cs.q = skeletons[d].q;
    for (int pos = 0; pos < 3; ++pos) {
      const Literal& lit = f.clauses[d].literals[pos];
      OccurrenceInfo occ;
      occ.variable = lit.variable;
      occ.clause = d;
      occ.position = pos;
      occ.positive = lit.positive;
      occ.pi = occurrence_index(f, lit.variable, d);
      occ.t_clique = skeletons[d].t[pos];
      const VariableGadget& g = gadgets[lit.variable];
      occ.k_cliques = {g.cliques[4 * occ.pi], g.cliques[4 * occ.pi + 1],
                       g.cliques[4 * occ.pi + 2]};
      cs.occ[pos] = occ;
    }
    s.clauses.push_back(cs);
  }
  std::vector<int> levels(b.clique_count());
  for (int c = 0; c < b.clique_count(); ++c) levels[c] = b.level_of(c);
  auto adjacent = [&](int c1, int c2) {
    for (int u : b.members(c1))
      for (int v : b.members(c2))
        if (b.has_edge(u, v)) return true;
    return false;
  };
  MergingModel model = build_merging_model(s, b.clique_count(), levels, adjacent);
  require(check_levels_acyclic(model), "merging model violates the level discipline");

  // pad levels 2, 3, 4 in order; creation order within a level matches
  // (clause, literal position) order
  for (int level = 2; level <= 4; ++level)
    for (int c = 0; c < b.clique_count(); ++c)
      if (b.level_of(c) == level) pad_clique(b, model, c);

  std::vector<int> clique_perm;
  ReducedInstance out;
  out.instance = b.freeze(nullptr, &clique_perm);
  out.model.clique_count = model.clique_count;
  out.model.level.resize(model.clique_count);
  out.model.adjacency.assign(model.clique_count, {});
  for (int old = 0; old < model.clique_count; ++old)
    out.model.level[clique_perm[old]] = model.level[old];
  for (auto [a, c] : model.edges) {
    int na = clique_perm[a], nc = clique_perm[c];
    out.model.edges.emplace_back(std::min(na, nc), std::max(na, nc));
  }
  std::sort(out.model.edges.begin(), out.model.edges.end());
  for (auto [a, c] : out.model.edges) {
    out.model.adjacency[a].push_back(c);
    out.model.adjacency[c].push_back(a);
  }
  return out;
}

Stats instance_stats(const Instance& inst) {
  Stats s;
  s.vertex_count = (int)inst.vertices.size();
  s.edge_count = inst.graph.edge_count();
  s.clique_sizes.assign(inst.cliques.size(), 0);
  for (int v = 0; v < s.vertex_count; ++v) ++s.clique_sizes[inst.vertex_clique[v]];
  std::vector<int> incidence(s.vertex_count, 0);
  for (const PackedP3& p : inst.packing) {
    switch (p.role) {
      case P3Role::var: ++s.h_var; break;
      case P3Role::tra: ++s.h_tra; break;
      case P3Role::pad: ++s.h_pad; break;
    }
    ++incidence[p.x];
    ++incidence[p.y];
    ++incidence[p.z];
  }
  for (int v = 0; v < s.vertex_count; ++v) s.max_p3_incidence = std::max(s.max_p3_incidence, incidence[v]);
  return s;
}

std::string stats_to_json(const Instance& inst, const Stats& s) {
  nlohmann::ordered_json j;
  j["vertices"] = s.vertex_count;
  j["edges"] = s.edge_count;
  j["h_var"] = s.h_var;
  j["h_tra"] = s.h_tra;
  j["h_pad"] = s.h_pad;
  j["max_p3_incidence"] = s.max_p3_incidence;
  std::map<int, int> histogram;
  for (int size : s.clique_sizes) ++histogram[size];
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (auto [size, count] : histogram) h[std::to_string(size)] = count;
  j["clique_size_histogram"] = h;
  return j.dump(2) + "\n";
}

}  // namespace ceamp
