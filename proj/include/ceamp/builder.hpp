#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ceamp/graph.hpp"

namespace ceamp {

// Mutable instance under construction. Vertices join a clique at creation
// and intra-clique edges are maintained automatically. freeze() produces a
// canonically sorted Instance.
class InstanceBuilder {
 public:
  int add_clique(const CliqueId& id, int level);
  int add_vertex(const VertexId& id, int clique);

  bool has_vertex(const VertexId& id) const { return vertex_lookup_.count(id.str()) > 0; }
  int vertex(const VertexId& id) const;
  int clique(const CliqueId& id) const;
  const std::vector<int>& members(int clique) const { return members_[clique]; }
  int clique_of(int vertex) const { return vertex_clique_[vertex]; }
  int clique_count() const { return (int)clique_ids_.size(); }
  int vertex_count() const { return (int)vertex_ids_.size(); }
  int level_of(int clique) const { return clique_level_[clique]; }
  const CliqueId& clique_id(int clique) const { return clique_ids_[clique]; }
  const VertexId& vertex_id(int vertex) const { return vertex_ids_[vertex]; }

  bool has_edge(int u, int v) const { return graph_.has_edge(u, v); }
  void add_edge(int u, int v) { graph_.add_edge(u, v); }
  void remove_edge(int u, int v) { graph_.remove_edge(u, v); }
  const Graph& graph() const { return graph_; }

  // Asserts the triple is an induced P3 of the current graph and that its
  // pairs are not covered yet.
  void add_p3(int x, int y, int z, P3Role role);
  void remove_p3(int x, int y, int z);  // unordered endpoint match; must exist
  const std::vector<PackedP3>& packing() const { return packing_; }
  int p3_count(P3Role role) const;
  bool pair_covered(int u, int v) const { return covered_.count(pair_key(u, v)) > 0; }

  // Sorts vertices, cliques and packing canonically and remaps everything.
  // Optional outputs give old index -> new index maps.
  Instance freeze(std::vector<int>* vertex_perm = nullptr,
                  std::vector<int>* clique_perm = nullptr) const;

 private:
  std::vector<VertexId> vertex_ids_;
  std::vector<CliqueId> clique_ids_;
  std::vector<int> clique_level_;
  std::vector<int> vertex_clique_;
  std::vector<std::vector<int>> members_;
  Graph graph_;
  std::vector<PackedP3> packing_;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> clique_lookup_;
  std::unordered_set<std::uint64_t> covered_;
};

}  // namespace ceamp
