#include "ceamp/clause_gadget.hpp"

#include "ceamp/check.hpp"

namespace ceamp {

ClauseSkeleton build_clause_skeleton(InstanceBuilder& b, int clause,
                                     const std::array<int, 3>& vars) {
  require(vars[0] != vars[1] && vars[1] != vars[2] && vars[0] != vars[2],
          "clause variables must be pairwise distinct");
  ClauseSkeleton sk;
  sk.clause = clause;
  sk.variables = vars;
  for (int k = 1; k <= 4; ++k) sk.q[k - 1] = b.add_clique(clause_clique(clause, k), k == 1 || k == 4 ? 1 : (k == 3 ? 2 : 3));
  for (int pos = 0; pos < 3; ++pos) sk.t[pos] = b.add_clique(transfer_clique(clause, vars[pos]), 4);

  auto qv = [&](int k, int t) { return b.add_vertex(clause_vertex(clause, k, t), sk.q[k - 1]); };
  auto tv = [&](int pos, int t) {
    return b.add_vertex(transfer_vertex(clause, vars[pos], t), sk.t[pos]);
  };

  // seeds: Q1 and Q4 are singletons (shared centers); Q3 carries the center
  // of P3,P4 plus the endpoints of P5,P6; Q2 carries the endpoints of
  // P1..P4; each T carries the endpoints of its P pair
  int q1_0 = qv(1, 0);
  int q4_0 = qv(4, 0);
  int q3_0 = qv(3, 0), q3_1 = qv(3, 1), q3_2 = qv(3, 2);
  int q2_0 = qv(2, 0), q2_1 = qv(2, 1), q2_2 = qv(2, 2), q2_3 = qv(2, 3);
  int tp_0 = tv(0, 0), tp_1 = tv(0, 1);
  int tq_0 = tv(1, 0), tq_1 = tv(1, 1);
  int tr_0 = tv(2, 0), tr_1 = tv(2, 1);

  auto tra = [&](int x, int y, int z) {
    b.add_edge(x, y);
    b.add_edge(y, z);
    b.add_p3(x, y, z, P3Role::tra);
  };
  tra(tp_0, q1_0, q2_0);  // P1: T^p and Q2 via Q1
  tra(tp_1, q1_0, q2_1);  // P2
  tra(tq_0, q3_0, q2_2);  // P3: T^q and Q2 via Q3
  tra(tq_1, q3_0, q2_3);  // P4
  tra(tr_0, q4_0, q3_1);  // P5: T^r and Q3 via Q4
  tra(tr_1, q4_0, q3_2);  // P6
  return sk;
}

ConnectionRewiring connect_to_variable(InstanceBuilder& b, const ClauseSkeleton& skeleton,
                                       int position, int pi, bool positive) {
  ConnectionRewiring rw;
  rw.variable = skeleton.variables[position];
  rw.clause = skeleton.clause;
  rw.position = position;
  rw.positive = positive;
  rw.pi = pi;
  int i = rw.variable;
  int base = 4 * pi;

  auto kv = [&](int off, int p) { return b.vertex(var_vertex(i, base + off, p)); };
  // v1, v2 sit in K_{4pi+1}; v3..v8 in K_{4pi+2} / K_{4pi} depending on sign
  int lo = positive ? 0 : 2;  // clique offset hosting v5..v8
  int hi = positive ? 2 : 0;  // clique offset hosting v3, v4
  rw.v[0] = kv(1, 0);
  rw.v[1] = kv(1, 1);
  rw.v[2] = kv(hi, 1);
  rw.v[3] = kv(hi, 2);
  rw.v[4] = kv(lo, 0);
  rw.v[5] = kv(lo, 1);
  rw.v[6] = kv(lo, 3);
  rw.v[7] = kv(lo, 4);
  const auto& v = rw.v;  // v[0] = v1, ..., v[7] = v8

  // remove the four progression P3s the connection supplants
  const std::array<std::array<int, 3>, 4> doomed = {{{v[7], v[0], v[2]},
                                                     {v[6], v[0], v[3]},
                                                     {v[5], v[1], v[2]},
                                                     {v[4], v[1], v[3]}}};
  for (const auto& d : doomed) {
    rw.removed.push_back(canonical_p3(PackedP3{d[0], d[1], d[2], P3Role::var}));
    b.remove_p3(d[0], d[1], d[2]);
    b.remove_edge(d[0], d[1]);
    b.remove_edge(d[1], d[2]);
  }

  // fresh endpoints w1..w4 in T, distinct from the skeleton seeds
  int tcl = skeleton.t[position];
  int next = (int)b.members(tcl).size();
  for (int k = 0; k < 4; ++k)
    rw.w[k] = b.add_vertex(transfer_vertex(rw.clause, i, next + k), tcl);
  const auto& w = rw.w;

  // restore coverage inside the gadget: v5 v6 v2 and v1 v7 v8
  b.add_edge(v[5], v[1]);
  b.add_p3(v[4], v[5], v[1], P3Role::var);
  b.add_edge(v[0], v[6]);
  b.add_p3(v[0], v[6], v[7], P3Role::var);
  rw.added_var.push_back(canonical_p3(PackedP3{v[4], v[5], v[1], P3Role::var}));
  rw.added_var.push_back(canonical_p3(PackedP3{v[0], v[6], v[7], P3Role::var}));

  // transferring P3s w1 v1 v3, w2 v2 v4, w3 v2 v3, w4 v1 v4
  const std::array<std::array<int, 3>, 4> links = {{{w[0], v[0], v[2]},
                                                    {w[1], v[1], v[3]},
                                                    {w[2], v[1], v[2]},
                                                    {w[3], v[0], v[3]}}};
  for (const auto& l : links) {
    b.add_edge(l[0], l[1]);
    b.add_edge(l[1], l[2]);  // restores one of the edges removed above
    b.add_p3(l[0], l[1], l[2], P3Role::tra);
    rw.added_tra.push_back(canonical_p3(PackedP3{l[0], l[1], l[2], P3Role::tra}));
  }
  return rw;
}

}  // namespace ceamp
