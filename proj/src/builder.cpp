#include "ceamp/builder.hpp"

#include <algorithm>
#include <numeric>

#include "ceamp/check.hpp"

namespace ceamp {

int InstanceBuilder::add_clique(const CliqueId& id, int level) {
  require(clique_lookup_.emplace(id.str(), (int)clique_ids_.size()).second,
          "duplicate clique " + id.str());
  clique_ids_.push_back(id);
  clique_level_.push_back(level);
  members_.emplace_back();
  return (int)clique_ids_.size() - 1;
}

int InstanceBuilder::add_vertex(const VertexId& id, int clique) {
  require(clique >= 0 && clique < clique_count(), "clique index out of range");
  require(vertex_lookup_.emplace(id.str(), (int)vertex_ids_.size()).second,
          "duplicate vertex " + id.str());
  vertex_ids_.push_back(id);
  int v = graph_.add_vertex();
  vertex_clique_.push_back(clique);
  for (int u : members_[clique]) graph_.add_edge(u, v);
  members_[clique].push_back(v);
  return v;
}

int InstanceBuilder::vertex(const VertexId& id) const {
  auto it = vertex_lookup_.find(id.str());
  require(it != vertex_lookup_.end(), "unknown vertex " + id.str());
  return it->second;
}

int InstanceBuilder::clique(const CliqueId& id) const {
  auto it = clique_lookup_.find(id.str());
  require(it != clique_lookup_.end(), "unknown clique " + id.str());
  return it->second;
}

void InstanceBuilder::add_p3(int x, int y, int z, P3Role role) {
  require(x != y && y != z && x != z, "degenerate P3");
  require(graph_.has_edge(x, y) && graph_.has_edge(y, z) && !graph_.has_edge(x, z),
          "triple is not an induced P3: " + vertex_ids_[x].str() + " " + vertex_ids_[y].str() +
              " " + vertex_ids_[z].str());
  PackedP3 p = canonical_p3(PackedP3{x, y, z, role});
  for (std::uint64_t k : p3_pair_keys(p))
    require(covered_.insert(k).second, "pair already covered by the packing");
  packing_.push_back(p);
}

void InstanceBuilder::remove_p3(int x, int y, int z) {
  PackedP3 p = canonical_p3(PackedP3{x, y, z, P3Role::var});
  for (std::size_t t = 0; t < packing_.size(); ++t) {
    if (packing_[t].x == p.x && packing_[t].y == p.y && packing_[t].z == p.z) {
      for (std::uint64_t k : p3_pair_keys(p)) covered_.erase(k);
      packing_.erase(packing_.begin() + t);
      return;
    }
  }
  throw std::runtime_error("P3 to remove is absent from the packing: " + vertex_ids_[x].str() +
                           " " + vertex_ids_[y].str() + " " + vertex_ids_[z].str());
}

int InstanceBuilder::p3_count(P3Role role) const {
  int n = 0;
  for (const PackedP3& p : packing_) n += p.role == role;
  return n;
}

Instance InstanceBuilder::freeze(std::vector<int>* vertex_perm,
                                 std::vector<int>* clique_perm) const {
  int nv = (int)vertex_ids_.size();
  int nc = (int)clique_ids_.size();

  std::vector<int> vorder(nv), corder(nc);
  std::iota(vorder.begin(), vorder.end(), 0);
  std::iota(corder.begin(), corder.end(), 0);
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return vertex_ids_[a] < vertex_ids_[b]; });
  std::sort(corder.begin(), corder.end(),
            [&](int a, int b) { return clique_ids_[a] < clique_ids_[b]; });

  std::vector<int> vmap(nv), cmap(nc);
  for (int i = 0; i < nv; ++i) vmap[vorder[i]] = i;
  for (int i = 0; i < nc; ++i) cmap[corder[i]] = i;

  Instance inst;
  inst.ell = 0;
  inst.vertices.resize(nv);
  inst.vertex_clique.resize(nv);
  inst.cliques.resize(nc);
  inst.clique_level.resize(nc);
  for (int old = 0; old < nv; ++old) {
    inst.vertices[vmap[old]] = vertex_ids_[old];
    inst.vertex_clique[vmap[old]] = cmap[vertex_clique_[old]];
  }
  for (int old = 0; old < nc; ++old) {
    inst.cliques[cmap[old]] = clique_ids_[old];
    inst.clique_level[cmap[old]] = clique_level_[old];
  }
  inst.graph = Graph(nv);
  for (std::uint64_t k : graph_.edge_keys()) {
    auto [u, v] = key_pair(k);
    inst.graph.add_edge(vmap[u], vmap[v]);
  }
  inst.packing.reserve(packing_.size());
  for (const PackedP3& p : packing_)
    inst.packing.push_back(canonical_p3(PackedP3{vmap[p.x], vmap[p.y], vmap[p.z], p.role}));
  std::sort(inst.packing.begin(), inst.packing.end(), [](const PackedP3& a, const PackedP3& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  });
  inst.rebuild_lookup();

  if (vertex_perm) *vertex_perm = vmap;
  if (clique_perm) *clique_perm = cmap;
  return inst;
}

}  // namespace ceamp
