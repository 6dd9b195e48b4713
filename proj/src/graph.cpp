#include "ceamp/graph.hpp"

#include <algorithm>

#include "ceamp/check.hpp"

namespace ceamp {

static std::string bracketed(std::initializer_list<int> xs) {
  std::string out;
  for (int x : xs) out += "[" + std::to_string(x) + "]";
  return out;
}

std::string VertexId::str() const {
  switch (kind) {
    case VertexKind::var: return "v" + bracketed({a, b, c});
    case VertexKind::clause: return "Q" + bracketed({a, b, c});
    case VertexKind::transfer: return "T" + bracketed({a, b, c});
    case VertexKind::plain: return "u" + bracketed({a});
  }
  return "?";
}

static std::vector<int> parse_brackets(const std::string& s, std::size_t from, const std::string& ctx) {
  std::vector<int> out;
  std::size_t i = from;
  while (i < s.size()) {
    require(s[i] == '[', "bad identifier: " + ctx);
    std::size_t close = s.find(']', i);
    require(close != std::string::npos, "bad identifier: " + ctx);
    out.push_back(std::stoi(s.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return out;
}

VertexId VertexId::parse(const std::string& s) {
  require(!s.empty(), "empty vertex id");
  std::vector<int> idx = parse_brackets(s, 1, s);
  switch (s[0]) {
    case 'v':
      require(idx.size() == 3, "bad vertex id: " + s);
      return var_vertex(idx[0], idx[1], idx[2]);
    case 'Q':
      require(idx.size() == 3, "bad vertex id: " + s);
      return clause_vertex(idx[0], idx[1], idx[2]);
    case 'T':
      require(idx.size() == 3, "bad vertex id: " + s);
      return transfer_vertex(idx[0], idx[1], idx[2]);
    case 'u':
      require(idx.size() == 1, "bad vertex id: " + s);
      return plain_vertex(idx[0]);
  }
  throw std::runtime_error("bad vertex id: " + s);
}

std::string CliqueId::str() const {
  switch (kind) {
    case CliqueKind::var: return "K" + bracketed({a, b});
    case CliqueKind::clause: return "Q" + bracketed({a, b});
    case CliqueKind::transfer: return "T" + bracketed({a, b});
    case CliqueKind::plain: return "C" + bracketed({a});
  }
  return "?";
}

CliqueId CliqueId::parse(const std::string& s) {
  require(!s.empty(), "empty clique id");
  std::vector<int> idx = parse_brackets(s, 1, s);
  switch (s[0]) {
    case 'K':
      require(idx.size() == 2, "bad clique id: " + s);
      return var_clique(idx[0], idx[1]);
    case 'Q':
      require(idx.size() == 2, "bad clique id: " + s);
      return clause_clique(idx[0], idx[1]);
    case 'T':
      require(idx.size() == 2, "bad clique id: " + s);
      return transfer_clique(idx[0], idx[1]);
    case 'C':
      require(idx.size() == 1, "bad clique id: " + s);
      return plain_clique(idx[0]);
  }
  throw std::runtime_error("bad clique id: " + s);
}

void Graph::add_edge(int u, int v) {
  require(u != v, "self-loop");
  require(u >= 0 && v >= 0 && u < vertex_count() && v < vertex_count(), "edge endpoint out of range");
  bool fresh = edges_.insert(pair_key(u, v)).second;
  require(fresh, "edge already present");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  std::size_t erased = edges_.erase(pair_key(u, v));
  require(erased > 0, "edge not present");
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<std::pair<int, int>> Graph::sorted_edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (std::uint64_t k : edges_) out.push_back(key_pair(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::sorted_neighbors(int v) const {
  std::vector<int> out(adj_[v].begin(), adj_[v].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string role_name(P3Role role) {
  switch (role) {
    case P3Role::var: return "var";
    case P3Role::tra: return "tra";
    case P3Role::pad: return "pad";
  }
  return "?";
}

P3Role role_from_name(const std::string& name) {
  if (name == "var") return P3Role::var;
  if (name == "tra") return P3Role::tra;
  if (name == "pad") return P3Role::pad;
  throw std::runtime_error("bad P3 role: " + name);
}

void sort_edits(std::vector<Edit>& edits) {
  std::sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    return std::tie(a.u, a.v, a.insert) < std::tie(b.u, b.v, b.insert);
  });
}

std::vector<PackedP3> induced_p3s(const Graph& g) {
  std::vector<PackedP3> out;
  for (int y = 0; y < g.vertex_count(); ++y) {
    std::vector<int> nb = g.sorted_neighbors(y);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.has_edge(nb[i], nb[j])) out.push_back(PackedP3{nb[i], y, nb[j], P3Role::var});
  }
  std::sort(out.begin(), out.end(), [](const PackedP3& a, const PackedP3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  return out;
}

Graph apply_edits(const Graph& g, const std::vector<Edit>& edits) {
  Graph out = g;
  std::unordered_set<std::uint64_t> seen;
  for (const Edit& e : edits) {
    require(e.u != e.v, "edit on a self-pair");
    require(seen.insert(pair_key(e.u, e.v)).second, "pair edited twice");
    if (e.insert) {
      require(!g.has_edge(e.u, e.v), "insert tag on an existing edge");
      out.add_edge(e.u, e.v);
    } else {
      require(g.has_edge(e.u, e.v), "delete tag on a non-edge");
      out.remove_edge(e.u, e.v);
    }
  }
  return out;
}

std::vector<int> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = next++;
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return comp;
}

bool is_cluster_graph(const Graph& g) {
  std::vector<int> comp = connected_components(g);
  int n = g.vertex_count();
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
  for (const std::vector<int>& block : members)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.has_edge(block[i], block[j])) return false;
  return true;
}

std::unordered_map<std::uint64_t, int> covered_pairs(const std::vector<PackedP3>& packing) {
  std::unordered_map<std::uint64_t, int> out;
  out.reserve(packing.size() * 3);
  for (int t = 0; t < (int)packing.size(); ++t) {
    for (std::uint64_t k : p3_pair_keys(packing[t])) {
      auto [it, fresh] = out.emplace(k, t);
      if (!fresh) {
        const PackedP3& p = packing[it->second];
        const PackedP3& q = packing[t];
        auto [u, v] = key_pair(k);
        throw std::runtime_error(
            "packing not modification-disjoint: pair {" + std::to_string(u) + "," +
            std::to_string(v) + "} lies in P3 #" + std::to_string(it->second) + " (" +
            std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) +
            ") and P3 #" + std::to_string(t) + " (" + std::to_string(q.x) + "," +
            std::to_string(q.y) + "," + std::to_string(q.z) + ")");
      }
    }
  }
  return out;
}

std::vector<int> proto_clusters(const Graph& g, const std::vector<PackedP3>& packing) {
  std::unordered_map<std::uint64_t, int> covered = covered_pairs(packing);
  Graph fix(g.vertex_count());
  for (std::uint64_t k : g.edge_keys())
    if (!covered.count(k)) {
      auto [u, v] = key_pair(k);
      fix.add_edge(u, v);
    }
  return connected_components(fix);
}

void Instance::rebuild_lookup() {
  vertex_lookup.clear();
  clique_lookup.clear();
  for (int v = 0; v < (int)vertices.size(); ++v) vertex_lookup[vertices[v].str()] = v;
  for (int c = 0; c < (int)cliques.size(); ++c) clique_lookup[cliques[c].str()] = c;
}

int Instance::vertex_index(const VertexId& id) const {
  auto it = vertex_lookup.find(id.str());
  require(it != vertex_lookup.end(), "unknown vertex " + id.str());
  return it->second;
}

int Instance::clique_index(const CliqueId& id) const {
  auto it = clique_lookup.find(id.str());
  require(it != clique_lookup.end(), "unknown clique " + id.str());
  return it->second;
}

std::vector<std::vector<int>> Instance::clique_members() const {
  std::vector<std::vector<int>> out(cliques.size());
  for (int v = 0; v < (int)vertices.size(); ++v) out[vertex_clique[v]].push_back(v);
  return out;
}

std::string p3_str(const Instance& inst, const PackedP3& p) {
  return "(" + inst.vertices[p.x].str() + "," + inst.vertices[p.y].str() + "," +
         inst.vertices[p.z].str() + ":" + role_name(p.role) + ")";
}

}  // namespace ceamp
