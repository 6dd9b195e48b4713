#include <doctest.h>

#include "ceamp/reduction.hpp"
#include "ceamp/transform.hpp"
#include "ceamp/verifier.hpp"
#include "support.hpp"

using namespace ceamp;

namespace {

Formula phi2() { return parse_dimacs("p cnf 3 2\n1 -2 -3 0\n-1 2 3 0\n"); }

}  // namespace

TEST_CASE("encode produces a zero-excess solution for phi2") {
  Instance inst = reduce(phi2()).instance;
  Assignment all_false;
  all_false.values = {false, false, false};
  std::vector<Edit> edits = encode_solution(inst, all_false);
  CHECK(edits.size() == inst.packing.size());
  CHECK(verify_solution(inst, edits).all_pass());

  SUBCASE("no edit twice, no dividing non-edge edited") {
    auto cover = covered_pairs(inst.packing);
    std::set<std::uint64_t> seen;
    for (const Edit& e : edits) {
      CHECK(seen.insert(pair_key(e.u, e.v)).second);
      CHECK(cover.count(pair_key(e.u, e.v)) == 1);
    }
  }

  SUBCASE("some pad P3 fully inside one cluster receives a single insert") {
    // with everything verified, each pad P3 has exactly one edit; find one
    // whose edit is the insert of its non-edge
    std::set<std::uint64_t> inserts;
    for (const Edit& e : edits)
      if (e.insert) inserts.insert(pair_key(e.u, e.v));
    bool found = false;
    for (const PackedP3& p : inst.packing)
      if (p.role == P3Role::pad && inserts.count(pair_key(p.x, p.z))) found = true;
    CHECK(found);
  }
}

TEST_CASE("encode rejects a non-satisfying assignment") {
  Instance inst = reduce(phi2()).instance;
  Assignment bad;
  bad.values = {false, true, true};  // falsifies clause 0
  CHECK_THROWS(encode_solution(inst, bad));
}

TEST_CASE("encoder keeps Q1 and Q4 apart") {
  Instance inst = reduce(phi2()).instance;
  for (const Assignment& a : testing::all_satisfying_assignments(phi2())) {
    std::vector<Edit> edits = encode_solution(inst, a);
    Graph edited = apply_edits(inst.graph, edits);
    std::vector<int> comp = connected_components(edited);
    for (int d = 0; d < 2; ++d) {
      int u = inst.vertex_index(clause_vertex(d, 1, 0));
      int v = inst.vertex_index(clause_vertex(d, 4, 0));
      CHECK(comp[u] != comp[v]);
    }
  }
}

TEST_CASE("round trip over every satisfying assignment of phi2") {
  Instance inst = reduce(phi2()).instance;
  std::vector<Assignment> sats = testing::all_satisfying_assignments(phi2());
  CHECK(sats.size() == 6);  // 8 assignments minus one per falsified clause
  for (const Assignment& a : sats) {
    std::vector<Edit> edits = encode_solution(inst, a);
    Assignment back = decode_assignment(inst, edits);
    CHECK(back == a);
  }
}

TEST_CASE("decode rejects invalid certificates") {
  Instance inst = reduce(phi2()).instance;
  Assignment all_false;
  all_false.values = {false, false, false};
  std::vector<Edit> edits = encode_solution(inst, all_false);
  SUBCASE("short edit set") {
    std::vector<Edit> short_edits(edits.begin(), edits.end() - 1);
    CHECK_THROWS(decode_assignment(inst, short_edits));
  }
  SUBCASE("per-variable parity corruption is reported") {
    // swapping one delete for an arbitrary covered pair breaks the cluster
    // graph, which the decoder checks first
    std::vector<Edit> broken = edits;
    broken.pop_back();
    CHECK_THROWS(decode_assignment(inst, broken));
  }
}

TEST_CASE("round trip on random satisfiable formulas") {
  testing::Rng rng(57);
  int done = 0;
  while (done < 3) {
    Formula f = testing::random_conforming_formula(rng, 4, 6);
    std::vector<Assignment> sats = testing::all_satisfying_assignments(f);
    if (sats.empty()) continue;
    ++done;
    Instance inst = reduce(f).instance;
    for (const Assignment& a : sats) {
      std::vector<Edit> edits = encode_solution(inst, a);
      CHECK(verify_solution(inst, edits).all_pass());
      CHECK(decode_assignment(inst, edits) == a);
    }
  }
}
