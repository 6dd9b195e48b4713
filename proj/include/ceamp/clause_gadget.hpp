#pragma once

#include <array>
#include <vector>

#include "ceamp/builder.hpp"

namespace ceamp {

// Skeleton of one clause gadget: cliques Q^1..Q^4 plus a transferring
// clique per literal, connected by the six transferring P3s P^1..P^6.
struct ClauseSkeleton {
  int clause = 0;
  std::array<int, 3> variables{};  // by literal position
  std::array<int, 4> q{};          // clique indices of Q^1..Q^4
  std::array<int, 3> t{};          // clique indices of T per literal position
};

// vars holds the clause's variable indices in literal order; they must be
// pairwise distinct.
ClauseSkeleton build_clause_skeleton(InstanceBuilder& b, int clause,
                                     const std::array<int, 3>& vars);

// Rewiring that couples T^i_d to variable i's gadget around the clique
// triple K_{4pi}..K_{4pi+2}: removes four progression P3s, restores the
// two intra-gadget ones and adds the four transferring P3s through fresh
// vertices w1..w4 of T.
struct ConnectionRewiring {
  int variable = 0;
  int clause = 0;
  int position = 0;  // literal position, 0..2
  bool positive = true;
  int pi = 0;
  std::array<int, 8> v{};  // designated v1..v8 (vertex indices)
  std::array<int, 4> w{};  // fresh w1..w4 in T
  std::vector<PackedP3> removed;
  std::vector<PackedP3> added_var;
  std::vector<PackedP3> added_tra;
};

ConnectionRewiring connect_to_variable(InstanceBuilder& b, const ClauseSkeleton& skeleton,
                                       int position, int pi, bool positive);

}  // namespace ceamp
