#pragma once

#include <vector>

#include "ceamp/formula.hpp"
#include "ceamp/graph.hpp"

namespace ceamp {

// Satisfying assignment -> zero-excess cluster editing set. The clause and
// variable structure is recovered from the instance itself; the assignment
// must satisfy it (checked up front). Postconditions are asserted: |S| =
// |H|, the edited graph is a cluster graph, every packed P3 receives
// exactly one edit and every edit is covered.
std::vector<Edit> encode_solution(const Instance& inst, const Assignment& a);

// Zero-excess cluster editing set -> satisfying assignment. Requires the
// edit set to be a valid solution (cluster graph, |S| = |H|); derives the
// merged/divided relation from the clusters alone and reads the truth
// values off the gadget parities.
Assignment decode_assignment(const Instance& inst, const std::vector<Edit>& edits);

}  // namespace ceamp
