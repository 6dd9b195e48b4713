#include <doctest.h>

#include "ceamp/reduction.hpp"
#include "ceamp/transform.hpp"
#include "ceamp/verifier.hpp"
#include "support.hpp"

using namespace ceamp;

namespace {

Instance reduced_phi2() {
  return reduce(parse_dimacs("p cnf 3 2\n1 -2 -3 0\n-1 2 3 0\n")).instance;
}

}  // namespace

TEST_CASE("verifier passes on a reduced instance and is pure") {
  Instance inst = reduced_phi2();
  Report packing = verify_packing(inst);
  Report structure = verify_structure(inst);
  CHECK(packing.all_pass());
  CHECK(structure.all_pass());
  CHECK(report_to_json(verify_structure(inst)) == report_to_json(structure));
  const CheckResult* incidence = structure.find("structure.max_p3_incidence");
  REQUIRE(incidence != nullptr);
  CHECK(incidence->witness == "49");
}

TEST_CASE("tampering: dropped pad P3 shows up as an uncovered pair") {
  Instance inst = reduced_phi2();
  for (std::size_t t = 0; t < inst.packing.size(); ++t)
    if (inst.packing[t].role == P3Role::pad) {
      inst.packing.erase(inst.packing.begin() + t);
      break;
    }
  Report r = verify_structure(inst);
  const CheckResult* coverage = r.find("structure.coverage");
  REQUIRE(coverage != nullptr);
  CHECK_FALSE(coverage->pass);
  CHECK(coverage->witness.find("covered 0 times") != std::string::npos);
}

TEST_CASE("tampering: an extra Q1-Q4 edge fails dividing and edge coverage") {
  Instance inst = reduced_phi2();
  int u = inst.vertex_index(clause_vertex(0, 1, 0));
  int v = inst.vertex_index(clause_vertex(0, 4, 0));
  inst.graph.add_edge(u, v);
  Report r = verify_structure(inst);
  CHECK_FALSE(r.find("structure.dividing")->pass);
  CHECK_FALSE(r.find("structure.inter_edges_covered")->pass);
}

TEST_CASE("tampering: packing violations are named") {
  Instance inst = reduced_phi2();
  SUBCASE("duplicated P3") {
    inst.packing.push_back(inst.packing.front());
    Report r = verify_packing(inst);
    CHECK_FALSE(r.find("packing.disjoint")->pass);
    CHECK(r.find("packing.disjoint")->witness.find("lies in") != std::string::npos);
  }
  SUBCASE("triple whose endpoints are adjacent") {
    PackedP3 bad = inst.packing.front();
    inst.graph.add_edge(bad.x, bad.z);
    Report r = verify_packing(inst);
    CHECK_FALSE(r.find("packing.induced")->pass);
  }
}

TEST_CASE("solution verification") {
  Instance inst = reduced_phi2();
  Assignment all_false;
  all_false.values = {false, false, false};
  std::vector<Edit> edits = encode_solution(inst, all_false);
  CHECK(verify_solution(inst, edits).all_pass());

  SUBCASE("an extra edit fails the size and budget checks") {
    std::vector<Edit> padded = edits;
    // delete one more covered edge that the solution kept
    auto cover = covered_pairs(inst.packing);
    std::set<std::uint64_t> edited;
    for (const Edit& e : edits) edited.insert(pair_key(e.u, e.v));
    for (auto [key, t] : cover) {
      auto [u, v] = key_pair(key);
      if (edited.count(key) || !inst.graph.has_edge(u, v)) continue;
      padded.push_back(Edit{u, v, false});
      break;
    }
    REQUIRE(padded.size() == edits.size() + 1);
    Report r = verify_solution(inst, padded);
    CHECK_FALSE(r.all_pass());
    CHECK_FALSE(r.find("solution.size")->pass);
  }

  SUBCASE("an edit moved to an uncovered pair fails coverage and budgets") {
    // swap one edit for a dividing non-edge insert
    std::vector<Edit> moved = edits;
    moved.pop_back();
    int u = inst.vertex_index(clause_vertex(0, 1, 0));
    int v = inst.vertex_index(clause_vertex(0, 4, 0));
    moved.push_back(Edit{std::min(u, v), std::max(u, v), true});
    Report r = verify_solution(inst, moved);
    CHECK_FALSE(r.find("solution.edits_covered")->pass);
    CHECK_FALSE(r.find("solution.one_edit_per_p3")->pass);
  }

  SUBCASE("report is machine readable") {
    std::string json = report_to_json(verify_solution(inst, edits));
    CHECK(json.find("\"check\"") != std::string::npos);
    CHECK(json.find("\"status\"") != std::string::npos);
    CHECK(json.find("\"witness\"") != std::string::npos);
  }
}
