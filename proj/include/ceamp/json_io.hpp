#pragma once

#include <string>
#include <vector>

#include "ceamp/graph.hpp"

namespace ceamp {

struct MergingModel;

// Canonical instance JSON:
// { "ell": 0,
//   "vertices": [{"id": "...", "clique": "...", "level": 0..4}, ...],
//   "edges": [["id","id"], ...],
//   "packing": [{"x":"id","y":"id","z":"id","role":"var|tra|pad"}, ...] }
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

// Edit-set JSON: [{"u":"id","v":"id","kind":"delete|insert"}, ...]
std::string edits_to_json(const Instance& inst, const std::vector<Edit>& edits);
std::vector<Edit> edits_from_json(const Instance& inst, const std::string& text);

// DOT export of the graph, one cluster subgraph per clique.
std::string instance_to_dot(const Instance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ceamp
