#include "ceamp/padding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ceamp/check.hpp"
#include "ceamp/ffield.hpp"

namespace ceamp {

FComponents analyze_f_components(const PaddingProblem& prob) {
  require(is_prime(prob.p), "padding modulus must be prime");
  require(prob.v_count <= prob.p, "|V| exceeds p");
  int w_count = 2 * prob.p;

  // nodes: 0..v_count-1 are V, v_count.. are W (offset encoding)
  auto wnode = [&](int w) { return prob.v_count + w; };
  std::map<int, std::vector<int>> adj;
  for (auto [v, w] : prob.f) {
    require(v >= 0 && v < prob.v_count, "F pair with V index out of range");
    require(w >= 0 && w < w_count, "F pair with W index out of range");
    adj[v].push_back(wnode(w));
    adj[wnode(w)].push_back(v);
  }
  for (auto& [node, list] : adj) {
    std::sort(list.begin(), list.end());
    require(std::adjacent_find(list.begin(), list.end()) == list.end(), "duplicate F pair");
  }

  FComponents out;
  std::set<int> visited;
  for (auto& [start, _] : adj) {
    if (visited.count(start)) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    visited.insert(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int n : adj[u])
        if (visited.insert(n).second) stack.push_back(n);
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> vs, ws;
    for (int node : comp)
      (node < prob.v_count ? vs : ws).push_back(node);

    if (comp.size() == 3) {
      require(vs.size() == 1 && ws.size() == 2, "F component is not a P3 with center in V");
      require(adj[vs[0]].size() == 2, "F component is not a P3 with center in V");
      P3Component p3;
      p3.v = vs[0];
      p3.w1 = ws[0] - prob.v_count;
      p3.w2 = ws[1] - prob.v_count;
      out.p3s.push_back(p3);
    } else if (comp.size() == 8) {
      require(vs.size() == 4 && ws.size() == 4, "F component is not a C8");
      for (int node : comp) require(adj[node].size() == 2, "F component is not a cycle");
      // canonical walk: start at the smallest W vertex, first step to its
      // smaller V neighbor; the pattern places that V vertex before the W
      C8Component c8;
      int anchor = ws[0];
      int v_first = std::min(adj[anchor][0], adj[anchor][1]);
      // order: v_first, anchor, then around the cycle
      std::array<int, 8> cycle{};
      cycle[0] = v_first;
      cycle[1] = anchor;
      for (int k = 2; k < 8; ++k) {
        int prev = cycle[k - 1], back = cycle[k - 2];
        cycle[k] = adj[prev][0] == back ? adj[prev][1] : adj[prev][0];
      }
      // closes back to v_first
      int last = cycle[7];
      require(adj[last][0] == cycle[0] || adj[last][1] == cycle[0], "C8 walk did not close");
      for (int k = 0; k < 4; ++k) {
        require(cycle[2 * k] < prob.v_count && cycle[2 * k + 1] >= prob.v_count,
                "C8 does not alternate between V and W");
        c8.v[k] = cycle[2 * k];
        c8.w[k] = cycle[2 * k + 1] - prob.v_count;
      }
      out.c8s.push_back(c8);
    } else {
      throw std::runtime_error("F component has " + std::to_string(comp.size()) +
                               " vertices; only P3 and C8 components are allowed");
    }
  }
  // deterministic order: by smallest V index
  std::sort(out.c8s.begin(), out.c8s.end(), [](const C8Component& a, const C8Component& b) {
    return *std::min_element(a.v.begin(), a.v.end()) < *std::min_element(b.v.begin(), b.v.end());
  });
  std::sort(out.p3s.begin(), out.p3s.end(),
            [](const P3Component& a, const P3Component& b) { return a.v < b.v; });
  return out;
}

namespace {

// label bookkeeping for one half of W
struct HalfLabels {
  std::vector<int> by_label;   // label -> W index, -1 while free
  std::vector<bool> assigned;  // per W index
  explicit HalfLabels(int p, int w_count) : by_label(p, -1), assigned(w_count, false) {}
  void assign(int label, int w) {
    require(by_label[label] < 0 && !assigned[w], "label or vertex used twice");
    by_label[label] = w;
    assigned[w] = true;
  }
};

}  // namespace

std::vector<Triangle> pack_triangles_exact(const PaddingProblem& prob) {
  int p = prob.p;
  require(prob.v_count == p, "exact triangle packing needs |V| = p");
  int w_count = 2 * p;
  FComponents comps = analyze_f_components(prob);
  require((int)(4 * comps.c8s.size() + comps.p3s.size()) <= p, "F has too many components");

  std::vector<int> v_by_label(p, -1);
  std::vector<bool> v_assigned(p, false);
  auto assign_v = [&](int label, int v) {
    require(v_by_label[label] < 0 && !v_assigned[v], "V label or vertex used twice");
    v_by_label[label] = v;
    v_assigned[v] = true;
  };
  HalfLabels w1(p, w_count), w2(p, w_count);

  // removed (i, j) positions of tau_cover; i indexes V labels, j W1 labels
  std::set<std::pair<int, int>> removed;

  // C8 components first: each takes a block of four consecutive labels
  int block = 0;
  for (const C8Component& c : comps.c8s) {
    int h = block;
    block += 4;
    // pattern: v(1) -> h, v(2) -> h+1, v(4) -> h+2, v(3) -> h+3
    assign_v(h, c.v[0]);
    assign_v(h + 1, c.v[1]);
    assign_v(h + 2, c.v[3]);
    assign_v(h + 3, c.v[2]);
    // W halves alternate around the cycle: w(1), w(3) -> W1; w(2), w(4) -> W2
    w1.assign(h + 1, c.w[0]);
    w1.assign(h + 2, c.w[2]);
    w2.assign(h + 1, c.w[1]);
    w2.assign(h + 2, c.w[3]);
    removed.insert({h, h + 1});
    removed.insert({h + 1, h + 1});
    removed.insert({h + 2, h + 2});
    removed.insert({h + 3, h + 2});
  }
  // then P3 components, smallest unused label each
  for (const P3Component& c : comps.p3s) {
    int j = 0;
    while (v_by_label[j] >= 0) ++j;
    assign_v(j, c.v);
    w1.assign(j, std::min(c.w1, c.w2));
    w2.assign(j, std::max(c.w1, c.w2));
    removed.insert({j, j});
  }
  // leftovers, smallest first
  {
    int label = 0;
    for (int v = 0; v < p; ++v) {
      if (v_assigned[v]) continue;
      while (v_by_label[label] >= 0) ++label;
      v_by_label[label] = v;
      v_assigned[v] = true;
    }
  }
  {
    std::vector<int> free_w;
    for (int w = 0; w < w_count; ++w)
      if (!w1.assigned[w] && !w2.assigned[w]) free_w.push_back(w);
    std::size_t next = 0;
    for (int label = 0; label < p; ++label)
      if (w1.by_label[label] < 0) w1.by_label[label] = free_w[next++];
    for (int label = 0; label < p; ++label)
      if (w2.by_label[label] < 0) w2.by_label[label] = free_w[next++];
    require(next == free_w.size(), "W labeling did not exhaust the vertices");
  }

  std::vector<Triangle> out;
  if (p == 2) {
    // 2 has no inverse mod 2; use the cover v_i w_j w'_{i+j} instead and
    // repair the second P3 component by hand (it cannot sit on a cover
    // triangle together with the first one)
    std::size_t n_p3 = comps.p3s.size();
    std::set<std::pair<int, int>> removed2;
    if (n_p3 >= 1) removed2.insert({0, 0});
    if (n_p3 == 2) {
      removed2.insert({1, 0});
      removed2.insert({1, 1});
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        if (removed2.count({i, j})) continue;
        out.push_back(Triangle{v_by_label[i], w1.by_label[j], w2.by_label[(i + j) % 2]});
      }
    if (n_p3 == 2)
      out.push_back(Triangle{v_by_label[1], w1.by_label[0], w2.by_label[0]});
    return out;
  }

  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (removed.count({i, j})) continue;
      int k = progression_third(f_make(i, p), f_make(j, p)).value;  // k = 2j - i
      out.push_back(Triangle{v_by_label[i], w1.by_label[j], w2.by_label[k]});
    }
  return out;
}

std::vector<Triangle> pack_triangles(const PaddingProblem& prob) {
  require(!prob.f.empty(), "dummy-padded triangle packing needs nonempty F");
  PaddingProblem padded = prob;
  int real = prob.v_count;
  padded.v_count = prob.p;  // dummies take indices real..p-1
  std::vector<Triangle> all = pack_triangles_exact(padded);
  std::vector<Triangle> out;
  for (const Triangle& t : all)
    if (t.v < real) out.push_back(t);
  return out;
}

std::vector<PackedP3> triangles_to_p3s(InstanceBuilder& b,
                                       const std::vector<std::array<int, 3>>& triangles) {
  std::vector<PackedP3> out;
  for (const auto& t : triangles) {
    int v = t[0], w1 = t[1], w2 = t[2];
    require(!b.has_edge(v, w2), "triangle conversion would shadow an existing edge");
    b.add_edge(v, w1);
    b.add_p3(v, w1, w2, P3Role::pad);
    out.push_back(canonical_p3(PackedP3{v, w1, w2, P3Role::pad}));
  }
  return out;
}

int pad_clique(InstanceBuilder& b, const MergingModel& mm, int clique) {
  require(b.level_of(clique) >= 2, "only cliques of level >= 2 are padded");

  // V: union of the out-neighbour cliques, canonical vertex order
  std::vector<int> v_vertices;
  for (int n : mm.out_neighbors(clique))
    for (int u : b.members(n)) v_vertices.push_back(u);
  std::sort(v_vertices.begin(), v_vertices.end(),
            [&](int a, int c) { return b.vertex_id(a) < b.vertex_id(c); });

  int p = smallest_prime_geq((int)v_vertices.size());
  while (2 * p < (int)b.members(clique).size()) p = smallest_prime_geq(p + 1);

  // grow the clique to exactly 2p vertices
  CliqueId cid = b.clique_id(clique);
  while ((int)b.members(clique).size() < 2 * p) {
    int t = (int)b.members(clique).size();
    VertexId vid = cid.kind == CliqueKind::clause ? clause_vertex(cid.a, cid.b, t)
                                                  : transfer_vertex(cid.a, cid.b, t);
    b.add_vertex(vid, clique);
  }
  const std::vector<int>& w_vertices = b.members(clique);

  std::map<int, int> v_pos, w_pos;
  for (int i = 0; i < (int)v_vertices.size(); ++i) v_pos[v_vertices[i]] = i;
  for (int i = 0; i < (int)w_vertices.size(); ++i) w_pos[w_vertices[i]] = i;

  // F: pairs between W and V contained in transferring P3s
  PaddingProblem prob;
  prob.p = p;
  prob.v_count = (int)v_vertices.size();
  for (const PackedP3& t : b.packing()) {
    if (t.role != P3Role::tra) continue;
    const std::array<std::pair<int, int>, 3> pairs = {
        {{t.x, t.y}, {t.y, t.z}, {t.x, t.z}}};
    for (auto [u, v] : pairs) {
      if (w_pos.count(u) && v_pos.count(v)) prob.f.emplace_back(v_pos[v], w_pos[u]);
      else if (w_pos.count(v) && v_pos.count(u)) prob.f.emplace_back(v_pos[u], w_pos[v]);
    }
  }
  require(!prob.f.empty(), "padding of " + cid.str() + " found no transferring pairs");

  std::vector<Triangle> triangles = pack_triangles(prob);
  std::vector<std::array<int, 3>> as_vertices;
  as_vertices.reserve(triangles.size());
  for (const Triangle& t : triangles)
    as_vertices.push_back({v_vertices[t.v], w_vertices[t.w1], w_vertices[t.w2]});
  return (int)triangles_to_p3s(b, as_vertices).size();
}

}  // namespace ceamp
