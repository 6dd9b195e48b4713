#include "ceamp/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>

#include "ceamp/check.hpp"
#include "ceamp/verifier.hpp"

namespace ceamp {

namespace {

using Clock = std::chrono::steady_clock;

struct PairStatic {
  int a = 0, b = 0;  // clique indices, a < b
  std::vector<std::pair<int, bool>> covered;  // (p3 index, pair is an edge)
  int unc_edges = 0;
  int unc_non_edges = 0;
};

struct P3PairRef {
  int pair_index = -1;  // -1: intra-clique pair, no decision attached
  bool is_edge = false;
};

struct SolverStatic {
  const Instance* inst = nullptr;
  int clique_count = 0;
  int words = 0;  // bitmatrix row width
  std::vector<PairStatic> pairs;                    // sorted by (a, b)
  std::unordered_map<std::uint64_t, int> pair_idx;  // clique pair key -> index
  std::vector<std::array<P3PairRef, 3>> p3_pairs;   // per packed P3
  std::vector<std::int8_t> init_edits;              // fixed intra edits per P3
  std::vector<std::int8_t> init_undecided;          // inter pairs per P3
  std::vector<int> branchable;                      // pair indices with covered pairs
  bool infeasible_at_build = false;
};

struct Decision {
  int a = 0, b = 0;
  bool merge = false;
};

// Dynamic state: union-find over cliques, a bitmatrix of component-level
// divide constraints, and the per-P3 edit budgets. Every clique pair
// transitions undecided -> merged/divided exactly once; its effects on the
// P3 budgets are applied at that transition.
struct SearchState {
  std::vector<int> uf;
  std::vector<std::vector<int>> members;  // valid at roots
  std::vector<std::uint64_t> divided;     // clique_count x words bitmatrix
  std::vector<std::int8_t> edits;
  std::vector<std::int8_t> undecided;
  std::deque<Decision> queue;
  int words = 0;

  int find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }
  bool bit(int a, int b) const { return divided[(std::size_t)a * words + (b >> 6)] >> (b & 63) & 1; }
  void set_bit(int a, int b) { divided[(std::size_t)a * words + (b >> 6)] |= 1ull << (b & 63); }
  void clear_bit(int a, int b) { divided[(std::size_t)a * words + (b >> 6)] &= ~(1ull << (b & 63)); }
};

constexpr int kUndecided = 0, kMerged = 1, kDivided = 2;

struct Solver {
  SolverStatic st;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool timed_out = false;
  long long steps = 0;

  bool out_of_time() {
    if (!has_deadline) return false;
    if (++steps % 1024 == 0 && Clock::now() > deadline) timed_out = true;
    return timed_out;
  }

  int pair_status(SearchState& s, int a, int b) {
    int ra = s.find(a), rb = s.find(b);
    if (ra == rb) return kMerged;
    if (s.bit(ra, rb)) return kDivided;
    return kUndecided;
  }

  // returns false on conflict
  bool bump(SearchState& s, int t, bool edited) {
    if (edited) {
      if (++s.edits[t] > 1) return false;
      --s.undecided[t];
      force_no_edit(s, t);
    } else {
      --s.undecided[t];
      if (s.edits[t] == 0) {
        if (s.undecided[t] == 0) return false;
        if (s.undecided[t] == 1) force_last_edit(s, t);
      }
    }
    return true;
  }

  // P3 already has its edit: remaining undecided pairs must stay unedited
  void force_no_edit(SearchState& s, int t) {
    for (const P3PairRef& ref : st.p3_pairs[t]) {
      if (ref.pair_index < 0) continue;
      const PairStatic& p = st.pairs[ref.pair_index];
      if (pair_status(s, p.a, p.b) != kUndecided) continue;
      s.queue.push_back(Decision{p.a, p.b, ref.is_edge});  // edge unedited = merged
    }
  }

  // P3 with no edit and one open pair: that pair must carry the edit
  void force_last_edit(SearchState& s, int t) {
    for (const P3PairRef& ref : st.p3_pairs[t]) {
      if (ref.pair_index < 0) continue;
      const PairStatic& p = st.pairs[ref.pair_index];
      if (pair_status(s, p.a, p.b) != kUndecided) continue;
      s.queue.push_back(Decision{p.a, p.b, !ref.is_edge});  // edge edited = divided
    }
  }

  bool apply_pair_effects(SearchState& s, int x, int y, bool merged) {
    auto it = st.pair_idx.find(pair_key(x, y));
    if (it == st.pair_idx.end()) return true;
    const PairStatic& p = st.pairs[it->second];
    if (merged && p.unc_non_edges > 0) return false;  // would insert uncovered
    if (!merged && p.unc_edges > 0) return false;     // would delete uncovered
    for (auto [t, is_edge] : p.covered)
      if (!bump(s, t, merged ? !is_edge : is_edge)) return false;
    return true;
  }

  // Decisions are recorded before their pair effects run so the forcing
  // scans see them; a state that conflicts mid-application is abandoned by
  // the caller, partial mutation included.
  bool do_merge(SearchState& s, int a, int b) {
    int ra = s.find(a), rb = s.find(b);
    if (ra == rb) return true;
    if (s.bit(ra, rb)) return false;
    std::vector<int> side_a = std::move(s.members[ra]);
    std::vector<int> side_b_snapshot = s.members[rb];

    // partners divided from exactly one side become divided from the union
    std::vector<int> new_for_b, new_for_a;
    for (int w = 0; w < s.words; ++w) {
      std::uint64_t rowa = s.divided[(std::size_t)ra * s.words + w];
      std::uint64_t rowb = s.divided[(std::size_t)rb * s.words + w];
      std::uint64_t only_a = rowa & ~rowb, only_b = rowb & ~rowa;
      while (only_a) {
        int bit = std::countr_zero(only_a);
        only_a &= only_a - 1;
        new_for_b.push_back(w * 64 + bit);
      }
      while (only_b) {
        int bit = std::countr_zero(only_b);
        only_b &= only_b - 1;
        new_for_a.push_back(w * 64 + bit);
      }
    }

    // absorb ra into rb
    s.uf[ra] = rb;
    s.members[rb].insert(s.members[rb].end(), side_a.begin(), side_a.end());
    s.members[ra].clear();
    for (int w = 0; w < s.words; ++w) {
      s.divided[(std::size_t)rb * s.words + w] |= s.divided[(std::size_t)ra * s.words + w];
      s.divided[(std::size_t)ra * s.words + w] = 0;
    }
    // partners of both sides already hold bit(x, rb); bits pointing at the
    // absorbed root are never queried again
    for (int x : new_for_b) {
      s.clear_bit(x, ra);
      s.set_bit(x, rb);
    }

    for (int x : side_a)
      for (int y : side_b_snapshot)
        if (!apply_pair_effects(s, x, y, true)) return false;
    for (int x : new_for_b)
      for (int u : side_b_snapshot)
        for (int v : s.members[x])
          if (!apply_pair_effects(s, u, v, false)) return false;
    for (int x : new_for_a)
      for (int u : side_a)
        for (int v : s.members[x])
          if (!apply_pair_effects(s, u, v, false)) return false;
    return true;
  }

  bool do_divide(SearchState& s, int a, int b) {
    int ra = s.find(a), rb = s.find(b);
    if (ra == rb) return false;
    if (s.bit(ra, rb)) return true;
    s.set_bit(ra, rb);
    s.set_bit(rb, ra);
    for (int x : s.members[ra])
      for (int y : s.members[rb])
        if (!apply_pair_effects(s, x, y, false)) return false;
    return true;
  }

  bool drain(SearchState& s) {
    while (!s.queue.empty()) {
      if (out_of_time()) return false;
      Decision d = s.queue.front();
      s.queue.pop_front();
      int status = pair_status(s, d.a, d.b);
      if (status != kUndecided) {
        if ((status == kMerged) != d.merge) return false;
        continue;
      }
      if (d.merge ? !do_merge(s, d.a, d.b) : !do_divide(s, d.a, d.b)) return false;
    }
    return true;
  }

  std::vector<Edit> extract(SearchState& s) {
    const Instance& inst = *st.inst;
    std::vector<Edit> edits;
    for (auto [u, v] : inst.graph.sorted_edges())
      if (s.find(inst.vertex_clique[u]) != s.find(inst.vertex_clique[v]))
        edits.push_back(Edit{u, v, false});
    std::vector<std::vector<int>> blocks(inst.cliques.size());
    for (int v = 0; v < (int)inst.vertices.size(); ++v)
      blocks[s.find(inst.vertex_clique[v])].push_back(v);
    for (const std::vector<int>& block : blocks)
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
          if (!inst.graph.has_edge(block[i], block[j]))
            edits.push_back(
                Edit{std::min(block[i], block[j]), std::max(block[i], block[j]), true});
    sort_edits(edits);
    return edits;
  }

  std::optional<std::vector<Edit>> dfs(SearchState s, std::size_t cursor) {
    if (!drain(s)) return std::nullopt;
    while (cursor < st.branchable.size()) {
      const PairStatic& p = st.pairs[st.branchable[cursor]];
      if (pair_status(s, p.a, p.b) == kUndecided) break;
      ++cursor;
    }
    if (cursor == st.branchable.size()) return extract(s);
    const PairStatic& p = st.pairs[st.branchable[cursor]];
    for (bool merge : {true, false}) {
      if (out_of_time()) return std::nullopt;
      SearchState child = s;
      child.queue.push_back(Decision{p.a, p.b, merge});
      auto result = dfs(std::move(child), cursor + 1);
      if (result || timed_out) return result;
    }
    return std::nullopt;
  }
};

SolverStatic build_static(const Instance& inst) {
  SolverStatic st;
  st.inst = &inst;
  st.clique_count = (int)inst.cliques.size();
  st.words = (st.clique_count + 63) / 64;

  std::unordered_map<std::uint64_t, int> cover;
  try {
    cover = covered_pairs(inst.packing);
  } catch (const std::exception&) {
    st.infeasible_at_build = true;
    return st;
  }

  std::map<std::uint64_t, PairStatic> by_key;
  auto slot = [&](int c1, int c2) -> PairStatic& {
    std::uint64_t k = pair_key(c1, c2);
    PairStatic& p = by_key[k];
    p.a = std::min(c1, c2);
    p.b = std::max(c1, c2);
    return p;
  };

  st.p3_pairs.resize(inst.packing.size());
  st.init_edits.assign(inst.packing.size(), 0);
  st.init_undecided.assign(inst.packing.size(), 0);
  for (int t = 0; t < (int)inst.packing.size(); ++t) {
    const PackedP3& p = inst.packing[t];
    const std::array<std::pair<int, int>, 3> vp = {{{p.x, p.y}, {p.y, p.z}, {p.x, p.z}}};
    for (int e = 0; e < 3; ++e) {
      auto [u, v] = vp[e];
      bool is_edge = inst.graph.has_edge(u, v);
      int cu = inst.vertex_clique[u], cv = inst.vertex_clique[v];
      if (cu == cv) {
        st.p3_pairs[t][e] = P3PairRef{-1, is_edge};
        if (!is_edge) ++st.init_edits[t];  // intra non-edge is always inserted
      } else {
        slot(cu, cv);
        st.p3_pairs[t][e] = P3PairRef{0, is_edge};  // index patched below
        ++st.init_undecided[t];
      }
    }
  }

  for (int v = 0; v < (int)inst.vertices.size(); ++v)
    for (int u = v + 1; u < (int)inst.vertices.size(); ++u) {
      bool is_edge = inst.graph.has_edge(u, v);
      bool is_covered = cover.count(pair_key(u, v)) > 0;
      int cu = inst.vertex_clique[u], cv = inst.vertex_clique[v];
      if (cu == cv) {
        if (!is_edge && !is_covered) {
          st.infeasible_at_build = true;  // uncovered non-edge inside a proto-cluster
          return st;
        }
        continue;
      }
      if (is_covered) continue;
      PairStatic& p = slot(cu, cv);
      if (is_edge) ++p.unc_edges;
      else ++p.unc_non_edges;
    }

  st.pairs.reserve(by_key.size());
  for (auto& [k, p] : by_key) {
    st.pair_idx[k] = (int)st.pairs.size();
    st.pairs.push_back(p);
  }
  for (int t = 0; t < (int)inst.packing.size(); ++t) {
    const PackedP3& p = inst.packing[t];
    const std::array<std::pair<int, int>, 3> vp = {{{p.x, p.y}, {p.y, p.z}, {p.x, p.z}}};
    for (int e = 0; e < 3; ++e) {
      if (st.p3_pairs[t][e].pair_index < 0) continue;
      auto [u, v] = vp[e];
      int idx = st.pair_idx.at(pair_key(inst.vertex_clique[u], inst.vertex_clique[v]));
      st.p3_pairs[t][e].pair_index = idx;
      st.pairs[idx].covered.emplace_back(t, st.p3_pairs[t][e].is_edge);
    }
  }
  for (int i = 0; i < (int)st.pairs.size(); ++i)
    if (!st.pairs[i].covered.empty()) st.branchable.push_back(i);
  return st;
}

}  // namespace

SolveResult solve_zero_excess(const Instance& inst, std::optional<double> time_limit_seconds) {
  require(inst.ell == 0, "solver handles only ell = 0 instances");
  Solver solver;
  solver.st = build_static(inst);
  if (time_limit_seconds) {
    solver.has_deadline = true;
    solver.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(*time_limit_seconds));
  }
  if (solver.st.infeasible_at_build) return SolveResult{SolveStatus::infeasible, {}};

  SearchState root;
  root.words = solver.st.words;
  root.uf.resize(solver.st.clique_count);
  std::iota(root.uf.begin(), root.uf.end(), 0);
  root.members.resize(solver.st.clique_count);
  for (int c = 0; c < solver.st.clique_count; ++c) root.members[c] = {c};
  root.divided.assign((std::size_t)solver.st.clique_count * solver.st.words, 0);
  root.edits = solver.st.init_edits;
  root.undecided = solver.st.init_undecided;

  // uncovered pairs between cliques force their decision up front
  bool ok = true;
  for (const PairStatic& p : solver.st.pairs) {
    if (p.unc_edges > 0 && p.unc_non_edges > 0) ok = false;
    else if (p.unc_non_edges > 0) root.queue.push_back(Decision{p.a, p.b, false});
    else if (p.unc_edges > 0) root.queue.push_back(Decision{p.a, p.b, true});
  }
  ok = ok && solver.drain(root);
  // trigger states left by fixed intra edits
  for (int t = 0; t < (int)inst.packing.size() && ok; ++t) {
    if (root.edits[t] > 1) ok = false;
    else if (root.edits[t] == 1) solver.force_no_edit(root, t);
    else if (root.undecided[t] == 0) ok = false;
    else if (root.undecided[t] == 1) solver.force_last_edit(root, t);
  }
  ok = ok && solver.drain(root);
  if (solver.timed_out) return SolveResult{SolveStatus::timeout, {}};
  if (!ok) return SolveResult{SolveStatus::infeasible, {}};

  std::optional<std::vector<Edit>> witness = solver.dfs(std::move(root), 0);
  if (solver.timed_out) return SolveResult{SolveStatus::timeout, {}};
  if (!witness) return SolveResult{SolveStatus::infeasible, {}};

  Report check = verify_solution(inst, *witness);
  require(check.all_pass(), "solver produced an invalid witness");
  return SolveResult{SolveStatus::feasible, *witness};
}

namespace {

template <class Callback>
void for_each_partition(int n, Callback&& cb) {
  // restricted growth strings
  std::vector<int> block(n, 0), max_prefix(n, 0);
  for (;;) {
    cb(block);
    int i = n - 1;
    while (i > 0 && block[i] == max_prefix[i - 1] + 1) --i;
    if (i == 0) return;
    ++block[i];
    max_prefix[i] = std::max(max_prefix[i - 1], block[i]);
    for (int j = i + 1; j < n; ++j) {
      block[j] = 0;
      max_prefix[j] = max_prefix[j - 1];
    }
  }
}

std::size_t cost_for_vertex_blocks(const Graph& g, const std::vector<int>& block_of) {
  std::size_t cost = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      cost += (block_of[u] == block_of[v]) != g.has_edge(u, v);
  return cost;
}

std::vector<Edit> edits_for_vertex_blocks(const Graph& g, const std::vector<int>& block_of) {
  std::vector<Edit> edits;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      bool same = block_of[u] == block_of[v];
      bool edge = g.has_edge(u, v);
      if (same && !edge) edits.push_back(Edit{u, v, true});
      if (!same && edge) edits.push_back(Edit{u, v, false});
    }
  return edits;
}

}  // namespace

std::optional<std::vector<Edit>> brute_force_partition_solve(const Graph& g,
                                                             const std::vector<PackedP3>& h) {
  std::vector<int> proto = proto_clusters(g, h);
  int blocks = proto.empty() ? 0 : *std::max_element(proto.begin(), proto.end()) + 1;
  require(blocks <= 12, "brute_force_partition_solve: more than 12 proto-clusters");
  if (blocks == 0) return std::vector<Edit>{};

  std::size_t best_cost = SIZE_MAX;
  std::vector<int> best;
  std::vector<int> block_of(g.vertex_count());
  for_each_partition(blocks, [&](const std::vector<int>& part) {
    for (int v = 0; v < g.vertex_count(); ++v) block_of[v] = part[proto[v]];
    std::size_t cost = cost_for_vertex_blocks(g, block_of);
    if (cost < best_cost) {
      best_cost = cost;
      best = block_of;
    }
  });
  require(best_cost >= h.size(), "packing lower bound violated; packing is corrupt");
  if (best_cost != h.size()) return std::nullopt;
  std::vector<Edit> edits = edits_for_vertex_blocks(g, best);
  sort_edits(edits);
  return edits;
}

std::optional<std::vector<Edit>> brute_force_cluster_editing(const Graph& g, int budget) {
  require(g.vertex_count() <= 12, "brute_force_cluster_editing: more than 12 vertices");
  std::size_t best_cost = SIZE_MAX;
  std::vector<int> best;
  if (g.vertex_count() == 0) return std::vector<Edit>{};
  for_each_partition(g.vertex_count(), [&](const std::vector<int>& part) {
    std::size_t cost = cost_for_vertex_blocks(g, part);
    if (cost < best_cost) {
      best_cost = cost;
      best = part;
    }
  });
  if (best_cost > (std::size_t)budget) return std::nullopt;
  std::vector<Edit> edits = edits_for_vertex_blocks(g, best);
  sort_edits(edits);
  return edits;
}

}  // namespace ceamp
