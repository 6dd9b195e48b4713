#pragma once

#include <array>
#include <vector>

#include "ceamp/builder.hpp"
#include "ceamp/merging_model.hpp"

namespace ceamp {

// Triangle packing problem on the complete bipartite graph between V
// (indices 0..v_count-1, v_count <= p) and W (indices 0..2p-1), avoiding
// the prescribed pairs F. Every connected component of (V+W, F) must be a
// P3 with center in V or a C8.
struct PaddingProblem {
  int p = 2;
  int v_count = 0;
  std::vector<std::pair<int, int>> f;  // (v index, w index)
};

// One packed triangle; w1 is the W1-side vertex and becomes the center of
// the P3 the triangle later turns into.
struct Triangle {
  int v = 0, w1 = 0, w2 = 0;
  bool operator==(const Triangle&) const = default;
};

struct P3Component {
  int v = 0;        // center, in V
  int w1 = 0, w2 = 0;  // endpoints; w1 goes to the W1 half
};
struct C8Component {
  // cycle v[0] w[0] v[1] w[1] v[2] w[2] v[3] w[3], canonical walk
  std::array<int, 4> v{};
  std::array<int, 4> w{};
};
struct FComponents {
  std::vector<C8Component> c8s;
  std::vector<P3Component> p3s;
};

// Splits (V+W, F) into components and validates their shapes.
FComponents analyze_f_components(const PaddingProblem& prob);

// Edge-disjoint triangle packing covering exactly the V-W pairs outside F,
// one V-vertex per triangle, leaving the unused W-pairs connected.
// Requires v_count == p.
std::vector<Triangle> pack_triangles_exact(const PaddingProblem& prob);

// Same with v_count <= p: pads V with dummy labels and drops their
// triangles. Requires F nonempty.
std::vector<Triangle> pack_triangles(const PaddingProblem& prob);

// Converts triangles (as instance vertex triples v, w1, w2) into pad P3s:
// adds the edge v-w1 and packs (v, w1, w2) with center w1.
std::vector<PackedP3> triangles_to_p3s(InstanceBuilder& b,
                                       const std::vector<std::array<int, 3>>& triangles);

// Pads one clique of level >= 2 against its out-neighbors in the model.
// Returns the number of pad P3s added.
int pad_clique(InstanceBuilder& b, const MergingModel& mm, int clique);

}  // namespace ceamp
