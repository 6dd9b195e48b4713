#pragma once

#include <map>
#include <optional>

#include "ceamp/formula.hpp"
#include "ceamp/graph.hpp"
#include "ceamp/merging_model.hpp"

namespace ceamp {

struct ReducedInstance {
  Instance instance;
  MergingModel model;  // over instance clique indices
};

// Full construction: variable gadgets, clause skeletons, connection
// rewirings, merging model, padding of levels 2..4, ell = 0. The formula
// must be conforming (normalize first). Deterministic.
ReducedInstance reduce(const Formula& f);

struct Stats {
  int vertex_count = 0;
  std::size_t edge_count = 0;
  int h_var = 0, h_tra = 0, h_pad = 0;
  std::vector<int> clique_sizes;  // per clique, instance order
  int max_p3_incidence = 0;
};

Stats instance_stats(const Instance& inst);
std::string stats_to_json(const Instance& inst, const Stats& s);

}  // namespace ceamp
