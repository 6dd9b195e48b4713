#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ceamp {

enum class VertexKind : std::uint8_t { var = 0, clause = 1, transfer = 2, plain = 3 };

// Provenance-structured vertex identifier. Canonical text forms:
//   var       v[i][j][p]   vertex p of variable-gadget clique K^i_j
//   clause    Q[d][k][t]   vertex t of clause clique Q^k_d
//   transfer  T[d][i][t]   vertex t of transferring clique T^i_d
//   plain     u[a]         synthetic vertex (tests, hand-built instances)
struct VertexId {
  VertexKind kind = VertexKind::plain;
  int a = 0, b = 0, c = 0;
  auto operator<=>(const VertexId&) const = default;
  std::string str() const;
  static VertexId parse(const std::string& s);
};

inline VertexId var_vertex(int i, int j, int p) { return {VertexKind::var, i, j, p}; }
inline VertexId clause_vertex(int d, int k, int t) { return {VertexKind::clause, d, k, t}; }
inline VertexId transfer_vertex(int d, int i, int t) { return {VertexKind::transfer, d, i, t}; }
inline VertexId plain_vertex(int a) { return {VertexKind::plain, a, 0, 0}; }

enum class CliqueKind : std::uint8_t { var = 0, clause = 1, transfer = 2, plain = 3 };

// Clique identifier: K[i][j], Q[d][k], T[d][i], C[a].
struct CliqueId {
  CliqueKind kind = CliqueKind::plain;
  int a = 0, b = 0;
  auto operator<=>(const CliqueId&) const = default;
  std::string str() const;
  static CliqueId parse(const std::string& s);
};

inline CliqueId var_clique(int i, int j) { return {CliqueKind::var, i, j}; }
inline CliqueId clause_clique(int d, int k) { return {CliqueKind::clause, d, k}; }
inline CliqueId transfer_clique(int d, int i) { return {CliqueKind::transfer, d, i}; }
inline CliqueId plain_clique(int a) { return {CliqueKind::plain, a, 0}; }

// Unordered pair of distinct vertex indices packed into one key.
inline std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t)(std::uint32_t)u << 32 | (std::uint32_t)v;
}
inline std::pair<int, int> key_pair(std::uint64_t k) {
  return {(int)(k >> 32), (int)(k & 0xffffffffu)};
}

class Graph {
 public:
  explicit Graph(int n = 0) : adj_(n) {}
  int add_vertex() {
    adj_.emplace_back();
    return (int)adj_.size() - 1;
  }
  int vertex_count() const { return (int)adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const { return edges_.count(pair_key(u, v)) > 0; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  const std::unordered_set<std::uint64_t>& edge_keys() const { return edges_; }
  std::vector<std::pair<int, int>> sorted_edges() const;
  const std::unordered_set<int>& neighbors(int v) const { return adj_[v]; }
  std::vector<int> sorted_neighbors(int v) const;

 private:
  std::vector<std::unordered_set<int>> adj_;
  std::unordered_set<std::uint64_t> edges_;
};

enum class P3Role : std::uint8_t { var = 0, tra = 1, pad = 2 };

std::string role_name(P3Role role);
P3Role role_from_name(const std::string& name);

// Induced path x - y - z with center y; xy, yz edges and xz a non-edge of
// the host graph. Canonical storage keeps x < z.
struct PackedP3 {
  int x = 0, y = 0, z = 0;
  P3Role role = P3Role::var;
  bool operator==(const PackedP3&) const = default;
};

inline PackedP3 canonical_p3(PackedP3 p) {
  if (p.x > p.z) std::swap(p.x, p.z);
  return p;
}
inline std::array<std::uint64_t, 3> p3_pair_keys(const PackedP3& p) {
  return {pair_key(p.x, p.y), pair_key(p.y, p.z), pair_key(p.x, p.z)};
}

struct Edit {
  int u = 0, v = 0;
  bool insert = false;  // false: delete an edge, true: insert a non-edge
  bool operator==(const Edit&) const = default;
};

void sort_edits(std::vector<Edit>& edits);

// All induced P3s of g, one per unordered path, endpoints in canonical order.
std::vector<PackedP3> induced_p3s(const Graph& g);

// Symmetric difference. Validates tags against g and rejects repeated pairs.
Graph apply_edits(const Graph& g, const std::vector<Edit>& edits);

bool is_cluster_graph(const Graph& g);

// Component index per vertex, numbered in order of smallest member.
std::vector<int> connected_components(const Graph& g);

// Maps each pair of each packed P3 to the index of the P3 covering it.
// Throws on a modification-disjointness violation, naming both P3s.
std::unordered_map<std::uint64_t, int> covered_pairs(const std::vector<PackedP3>& packing);

// Connected components of the subgraph of g induced by the edges not
// covered by the packing.
std::vector<int> proto_clusters(const Graph& g, const std::vector<PackedP3>& packing);

struct Instance {
  std::vector<VertexId> vertices;  // canonically sorted
  Graph graph;
  std::vector<CliqueId> cliques;  // canonically sorted
  std::vector<int> clique_level;  // per clique
  std::vector<int> vertex_clique;  // per vertex
  std::vector<PackedP3> packing;  // canonically sorted
  int ell = 0;

  std::unordered_map<std::string, int> vertex_lookup;  // id text -> index
  std::unordered_map<std::string, int> clique_lookup;

  void rebuild_lookup();
  int vertex_index(const VertexId& id) const;
  int clique_index(const CliqueId& id) const;
  std::vector<std::vector<int>> clique_members() const;
};

std::string p3_str(const Instance& inst, const PackedP3& p);

}  // namespace ceamp
