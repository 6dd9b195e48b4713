#pragma once

// Shared helpers for the unit and acceptance suites: deterministic
// generators for formulas, graphs, packings and padding configurations,
// plus the exhaustive pair audits used as oracles.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ceamp/builder.hpp"
#include "ceamp/formula.hpp"
#include "ceamp/graph.hpp"
#include "ceamp/padding.hpp"

namespace ceamp::testing {

using Rng = std::mt19937;

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random 3-CNF with distinct variables per clause, then normalized, so the
// result is conforming. Rejects outputs that exceed the requested bounds
// (normalization may duplicate clauses or drop variables).
inline Formula random_conforming_formula(Rng& rng, int max_vars, int max_clauses) {
  for (;;) {
    int n = rand_int(rng, 3, max_vars);
    int m = rand_int(rng, 2, max_clauses);
    Formula f;
    f.variable_count = n;
    for (int d = 0; d < m; ++d) {
      std::vector<int> vars(n);
      std::iota(vars.begin(), vars.end(), 0);
      std::shuffle(vars.begin(), vars.end(), rng);
      Clause c;
      for (int k = 0; k < 3; ++k)
        c.literals.push_back(Literal{vars[k], rand_int(rng, 0, 1) == 1});
      f.clauses.push_back(c);
    }
    Formula g = normalize(f);
    if (g.variable_count <= max_vars && (int)g.clauses.size() <= max_clauses &&
        g.variable_count >= 3)
      return g;
  }
}

inline std::vector<Assignment> all_satisfying_assignments(const Formula& f) {
  std::vector<Assignment> out;
  int n = f.variable_count;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Assignment a;
    a.values.resize(n);
    for (int i = 0; i < n; ++i) a.values[i] = (mask >> (n - 1 - i)) & 1;
    if (satisfies(f, a)) out.push_back(a);
  }
  return out;
}

// The complete contradiction: all 8 sign patterns over 3 variables.
inline Formula contradiction_formula() {
  Formula f;
  f.variable_count = 3;
  for (int mask = 0; mask < 8; ++mask) {
    Clause c;
    for (int i = 0; i < 3; ++i) c.literals.push_back(Literal{i, (mask >> (2 - i) & 1) == 0});
    f.clauses.push_back(c);
  }
  return f;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

// Modification-disjoint packing grown greedily over the induced P3s.
inline std::vector<PackedP3> greedy_packing(const Graph& g) {
  std::vector<PackedP3> out;
  std::set<std::uint64_t> used;
  for (const PackedP3& p : induced_p3s(g)) {
    auto keys = p3_pair_keys(p);
    if (std::any_of(keys.begin(), keys.end(), [&](auto k) { return used.count(k) > 0; }))
      continue;
    for (auto k : keys) used.insert(k);
    out.push_back(p);
  }
  return out;
}

// Wraps (g, h) into an instance whose declared cliques are the
// proto-clusters, for exercising the solver and solution verifier on
// synthetic inputs.
inline Instance synthetic_instance(const Graph& g, const std::vector<PackedP3>& h) {
  std::vector<int> proto = proto_clusters(g, h);
  InstanceBuilder b;
  int blocks = 0;
  for (int p : proto) blocks = std::max(blocks, p + 1);
  for (int c = 0; c < blocks; ++c) b.add_clique(plain_clique(c), 0);
  std::vector<int> map(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) map[v] = b.add_vertex(plain_vertex(v), proto[v]);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      bool want = g.has_edge(u, v);
      bool have = b.has_edge(map[u], map[v]);
      if (want && !have) b.add_edge(map[u], map[v]);
      if (!want && have) b.remove_edge(map[u], map[v]);
    }
  for (const PackedP3& p : h) b.add_p3(map[p.x], map[p.y], map[p.z], p.role);
  return b.freeze();
}

// Random F for the triangle padding tool: c8_count C8s and p3_count P3 components
// over shuffled vertex pools. 4*c8_count + p3_count <= p is required.
inline PaddingProblem random_padding_problem(Rng& rng, int p, int c8_count, int p3_count,
                                             int v_count = -1) {
  PaddingProblem prob;
  prob.p = p;
  prob.v_count = v_count < 0 ? p : v_count;
  std::vector<int> vs(prob.v_count), ws(2 * p);
  std::iota(vs.begin(), vs.end(), 0);
  std::iota(ws.begin(), ws.end(), 0);
  std::shuffle(vs.begin(), vs.end(), rng);
  std::shuffle(ws.begin(), ws.end(), rng);
  std::size_t vi = 0, wi = 0;
  for (int c = 0; c < c8_count; ++c) {
    // cycle v0 w0 v1 w1 v2 w2 v3 w3
    int v[4], w[4];
    for (int k = 0; k < 4; ++k) v[k] = vs[vi++], w[k] = ws[wi++];
    for (int k = 0; k < 4; ++k) {
      prob.f.emplace_back(v[k], w[k]);
      prob.f.emplace_back(v[(k + 1) % 4], w[k]);
    }
  }
  for (int c = 0; c < p3_count; ++c) {
    int v = vs[vi++];
    prob.f.emplace_back(v, ws[wi++]);
    prob.f.emplace_back(v, ws[wi++]);
  }
  return prob;
}

struct PackAudit {
  bool edge_disjoint = true;
  bool covers_exactly = true;   // every V-W pair outside F exactly once
  bool avoids_f = true;         // no triangle touches an F pair
  bool one_v_per_triangle = true;
  bool residual_connected = true;
  bool ok() const {
    return edge_disjoint && covers_exactly && avoids_f && one_v_per_triangle &&
           residual_connected;
  }
};

// Exhaustive pair enumeration over the bipartite graph plus the W clique.
inline PackAudit audit_triangles(const PaddingProblem& prob,
                                 const std::vector<Triangle>& triangles) {
  PackAudit audit;
  int w_count = 2 * prob.p;
  std::set<std::pair<int, int>> f_set(prob.f.begin(), prob.f.end());
  std::map<std::pair<int, int>, int> vw_cover;
  std::map<std::pair<int, int>, int> ww_cover;
  for (const Triangle& t : triangles) {
    if (t.v < 0 || t.v >= prob.v_count || t.w1 == t.w2 || t.w1 < 0 || t.w2 < 0 ||
        t.w1 >= w_count || t.w2 >= w_count)
      audit.one_v_per_triangle = false;
    ++vw_cover[{t.v, t.w1}];
    ++vw_cover[{t.v, t.w2}];
    ++ww_cover[{std::min(t.w1, t.w2), std::max(t.w1, t.w2)}];
  }
  for (auto& [pair, count] : vw_cover) {
    if (count > 1) audit.edge_disjoint = false;
    if (f_set.count(pair)) audit.avoids_f = false;
  }
  for (auto& [pair, count] : ww_cover)
    if (count > 1) audit.edge_disjoint = false;
  for (int v = 0; v < prob.v_count; ++v)
    for (int w = 0; w < w_count; ++w) {
      bool in_f = f_set.count({v, w}) > 0;
      int covered = vw_cover.count({v, w}) ? vw_cover[{v, w}] : 0;
      if (!in_f && covered != 1) audit.covers_exactly = false;
      if (in_f && covered != 0) audit.covers_exactly = false;
    }
  // residual W graph: all W pairs minus the triangles' W pairs
  std::vector<int> parent(w_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < w_count; ++a)
    for (int b = a + 1; b < w_count; ++b)
      if (!ww_cover.count({a, b})) parent[find(a)] = find(b);
  for (int w = 1; w < w_count; ++w)
    if (find(w) != find(0)) audit.residual_connected = false;
  return audit;
}

}  // namespace ceamp::testing
