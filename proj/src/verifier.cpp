#include "ceamp/verifier.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ceamp/check.hpp"
#include "ceamp/merging_model.hpp"

namespace ceamp {

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(const std::string& check) const {
  for (const CheckResult& c : checks)
    if (c.check == check) return &c;
  return nullptr;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json e;
    e["check"] = c.check;
    e["status"] = c.pass ? "pass" : "fail";
    e["witness"] = c.witness;
    j.push_back(e);
  }
  return j.dump(2) + "\n";
}

namespace {

struct Checker {
  Report report;
  void pass(const std::string& name, const std::string& witness = "") {
    report.checks.push_back(CheckResult{name, true, witness});
  }
  void fail(const std::string& name, const std::string& witness) {
    report.checks.push_back(CheckResult{name, false, witness});
  }
  void result(const std::string& name, bool ok, const std::string& witness) {
    report.checks.push_back(CheckResult{name, ok, ok ? "" : witness});
  }
};

std::string pair_str(const Instance& inst, int u, int v) {
  return "{" + inst.vertices[u].str() + "," + inst.vertices[v].str() + "}";
}

// multiset of covered pairs; tolerates disjointness violations
std::map<std::uint64_t, std::vector<int>> coverage_multimap(const Instance& inst) {
  std::map<std::uint64_t, std::vector<int>> cover;
  for (int t = 0; t < (int)inst.packing.size(); ++t)
    for (std::uint64_t k : p3_pair_keys(inst.packing[t])) cover[k].push_back(t);
  return cover;
}

}  // namespace

Report verify_packing(const Instance& inst) {
  Checker ck;
  std::string bad_induced;
  for (const PackedP3& p : inst.packing) {
    bool ok = p.x != p.y && p.y != p.z && p.x != p.z && inst.graph.has_edge(p.x, p.y) &&
              inst.graph.has_edge(p.y, p.z) && !inst.graph.has_edge(p.x, p.z);
    if (!ok && bad_induced.empty()) bad_induced = p3_str(inst, p) + " is not an induced P3";
  }
  ck.result("packing.induced", bad_induced.empty(), bad_induced);

  std::string clash;
  for (const auto& [key, owners] : coverage_multimap(inst))
    if (owners.size() > 1 && clash.empty()) {
      auto [u, v] = key_pair(key);
      clash = "pair " + pair_str(inst, u, v) + " lies in " + p3_str(inst, inst.packing[owners[0]]) +
              " and " + p3_str(inst, inst.packing[owners[1]]);
    }
  ck.result("packing.disjoint", clash.empty(), clash);
  return ck.report;
}

Report verify_structure(const Instance& inst) {
  Checker ck;

  // (1) proto-clusters are exactly the declared cliques
  {
    std::vector<int> proto = proto_clusters(inst.graph, inst.packing);
    bool ok = true;
    std::string witness;
    std::map<int, int> proto_of_clique;
    for (int v = 0; v < (int)inst.vertices.size() && ok; ++v) {
      auto [it, fresh] = proto_of_clique.emplace(inst.vertex_clique[v], proto[v]);
      if (!fresh && it->second != proto[v]) {
        ok = false;
        witness = "clique " + inst.cliques[inst.vertex_clique[v]].str() + " spans two proto-clusters";
      }
    }
    if (ok) {
      std::map<int, int> clique_of_proto;
      for (int v = 0; v < (int)inst.vertices.size() && ok; ++v) {
        auto [it, fresh] = clique_of_proto.emplace(proto[v], inst.vertex_clique[v]);
        if (!fresh && it->second != inst.vertex_clique[v]) {
          ok = false;
          witness = "proto-cluster of " + inst.vertices[v].str() + " spans two cliques";
        }
      }
    }
    ck.result("structure.proto_clusters", ok, witness);
  }

  // (2) clique size table
  {
    std::vector<int> sizes(inst.cliques.size(), 0);
    for (int v = 0; v < (int)inst.vertices.size(); ++v) ++sizes[inst.vertex_clique[v]];
    std::string witness;
    // outer transferring cliques touch Q^1 or Q^4; the middle one touches Q^3
    std::optional<InstanceStructure> s;
    try {
      s = derive_structure(inst);
    } catch (const std::exception& e) {
      witness = std::string("structure derivation failed: ") + e.what();
    }
    if (witness.empty())
      for (int c = 0; c < (int)inst.cliques.size() && witness.empty(); ++c) {
        const CliqueId& id = inst.cliques[c];
        int expected = -1;
        switch (id.kind) {
          case CliqueKind::var: expected = 5; break;
          case CliqueKind::clause:
            expected = id.b == 1 || id.b == 4 ? 1 : (id.b == 3 ? 4 : 14);
            break;
          case CliqueKind::transfer: {
            for (const ClauseStructure& cs : s->clauses)
              for (const OccurrenceInfo& occ : cs.occ)
                if (occ.t_clique == c) expected = occ.position == 1 ? 46 : 34;
            break;
          }
          case CliqueKind::plain: expected = sizes[c]; break;
        }
        if (sizes[c] != expected)
          witness = "clique " + id.str() + " has " + std::to_string(sizes[c]) +
                    " vertices, expected " + std::to_string(expected);
      }
    ck.result("structure.sizes", witness.empty(), witness);
  }

  // (3) pairs between model-adjacent cliques covered exactly once, and
  // (4) dividing non-edges between the clique pairs that must stay apart
  {
    std::string witness;
    std::string dividing_witness;
    try {
      MergingModel mm = build_merging_model(inst);
      std::vector<std::vector<int>> members = inst.clique_members();
      std::map<std::uint64_t, std::vector<int>> cover = coverage_multimap(inst);
      for (auto [a, b] : mm.edges) {
        for (int u : members[a]) {
          for (int v : members[b]) {
            auto it = cover.find(pair_key(u, v));
            int n = it == cover.end() ? 0 : (int)it->second.size();
            if (n != 1 && witness.empty())
              witness = "pair " + pair_str(inst, u, v) + " between " + inst.cliques[a].str() +
                        " and " + inst.cliques[b].str() + " covered " + std::to_string(n) +
                        " times";
          }
        }
      }
      // dividing non-edges: all Q1 x Q4 pairs and K_{4pi+1} x Q1 pairs
      InstanceStructure s = derive_structure(inst);
      auto expect_dividing = [&](int c1, int c2) {
        for (int u : members[c1])
          for (int v : members[c2]) {
            if (inst.graph.has_edge(u, v) && dividing_witness.empty())
              dividing_witness = "unexpected edge " + pair_str(inst, u, v);
            if (cover.count(pair_key(u, v)) && dividing_witness.empty())
              dividing_witness = "pair " + pair_str(inst, u, v) + " should be uncovered";
          }
      };
      for (const ClauseStructure& cs : s.clauses) {
        expect_dividing(cs.q[0], cs.q[3]);
        for (const OccurrenceInfo& occ : cs.occ) expect_dividing(occ.k_cliques[1], cs.q[0]);
      }
    } catch (const std::exception& e) {
      witness = std::string("model derivation failed: ") + e.what();
    }
    ck.result("structure.coverage", witness.empty(), witness);
    ck.result("structure.dividing", dividing_witness.empty(), dividing_witness);
  }

  // (5) level discipline
  {
    std::string witness;
    bool ok = true;
    try {
      MergingModel mm = build_merging_model(inst);
      ok = check_levels_acyclic(mm);
      if (!ok) witness = "same-level model edge outside level 0";
      for (int c = 0; c < (int)inst.cliques.size() && ok; ++c) {
        const CliqueId& id = inst.cliques[c];
        int expected = 0;
        switch (id.kind) {
          case CliqueKind::var: expected = 0; break;
          case CliqueKind::clause: expected = id.b == 1 || id.b == 4 ? 1 : (id.b == 3 ? 2 : 3); break;
          case CliqueKind::transfer: expected = 4; break;
          case CliqueKind::plain: expected = inst.clique_level[c]; break;
        }
        if (inst.clique_level[c] != expected) {
          ok = false;
          witness = "clique " + id.str() + " declared on level " +
                    std::to_string(inst.clique_level[c]) + ", expected " + std::to_string(expected);
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      witness = std::string("model derivation failed: ") + e.what();
    }
    ck.result("structure.levels", ok, witness);
  }

  // (6) per-vertex incidence, recorded for cross-corpus comparison
  {
    std::vector<int> incidence(inst.vertices.size(), 0);
    for (const PackedP3& p : inst.packing) {
      ++incidence[p.x];
      ++incidence[p.y];
      ++incidence[p.z];
    }
    int max_incidence = 0;
    for (int v : incidence) max_incidence = std::max(max_incidence, v);
    ck.pass("structure.max_p3_incidence", std::to_string(max_incidence));
  }

  // (7) every edge between two cliques lies in a packed P3
  {
    std::string witness;
    std::map<std::uint64_t, std::vector<int>> cover = coverage_multimap(inst);
    for (auto [u, v] : inst.graph.sorted_edges()) {
      if (inst.vertex_clique[u] == inst.vertex_clique[v]) continue;
      if (!cover.count(pair_key(u, v))) {
        witness = "inter-clique edge " + pair_str(inst, u, v) + " is uncovered";
        break;
      }
    }
    ck.result("structure.inter_edges_covered", witness.empty(), witness);
  }

  return ck.report;
}

Report verify_solution(const Instance& inst, const std::vector<Edit>& edits) {
  Checker ck;

  std::optional<Graph> edited;
  try {
    edited = apply_edits(inst.graph, edits);
  } catch (const std::exception& e) {
    ck.fail("solution.cluster_graph", std::string("edit set invalid: ") + e.what());
  }
  if (edited) {
    ck.result("solution.cluster_graph", is_cluster_graph(*edited),
              "edited graph still contains an induced P3");
  }

  ck.result("solution.size",
            edits.size() == inst.packing.size(),
            "|S| = " + std::to_string(edits.size()) + " but |H| = " +
                std::to_string(inst.packing.size()));

  std::map<std::uint64_t, std::vector<int>> cover = coverage_multimap(inst);
  std::string uncovered;
  std::vector<int> edits_per_p3(inst.packing.size(), 0);
  for (const Edit& e : edits) {
    auto it = cover.find(pair_key(e.u, e.v));
    if (it == cover.end() || it->second.size() != 1) {
      if (uncovered.empty())
        uncovered = "edit on " + pair_str(inst, e.u, e.v) + " lies in " +
                    std::to_string(it == cover.end() ? 0 : it->second.size()) + " packed P3s";
      continue;
    }
    ++edits_per_p3[it->second[0]];
  }
  ck.result("solution.edits_covered", uncovered.empty(), uncovered);

  std::string miscount;
  for (int t = 0; t < (int)inst.packing.size(); ++t)
    if (edits_per_p3[t] != 1) {
      miscount = p3_str(inst, inst.packing[t]) + " received " +
                 std::to_string(edits_per_p3[t]) + " edits";
      break;
    }
  ck.result("solution.one_edit_per_p3", miscount.empty(), miscount);

  if (edited) {
    std::vector<int> comp = connected_components(*edited);
    std::map<int, int> comp_of_clique;
    std::string split;
    for (int v = 0; v < (int)inst.vertices.size(); ++v) {
      auto [it, fresh] = comp_of_clique.emplace(inst.vertex_clique[v], comp[v]);
      if (!fresh && it->second != comp[v]) {
        split = "clique " + inst.cliques[inst.vertex_clique[v]].str() + " is split across clusters";
        break;
      }
    }
    ck.result("solution.clusters_union_of_cliques", split.empty(), split);
  }
  return ck.report;
}

}  // namespace ceamp
