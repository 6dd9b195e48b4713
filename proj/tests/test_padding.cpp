#include <doctest.h>

#include "ceamp/padding.hpp"
#include "support.hpp"

using namespace ceamp;
using namespace ceamp::testing;

TEST_CASE("component analysis validates shapes") {
  SUBCASE("a P3 with its center in V") {
    PaddingProblem prob{2, 2, {{0, 1}, {0, 3}}};
    FComponents comps = analyze_f_components(prob);
    CHECK(comps.p3s.size() == 1);
    CHECK(comps.c8s.empty());
    CHECK(comps.p3s[0].v == 0);
  }
  SUBCASE("center in W is rejected") {
    // w0 adjacent to v0 and v1: center in W
    PaddingProblem prob{2, 2, {{0, 0}, {1, 0}}};
    CHECK_THROWS(analyze_f_components(prob));
  }
  SUBCASE("path of five is rejected") {
    PaddingProblem prob{5, 5, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}};
    CHECK_THROWS(analyze_f_components(prob));
  }
  SUBCASE("C8 walk starts at the smallest W vertex") {
    Rng rng(3);
    PaddingProblem prob = random_padding_problem(rng, 5, 1, 0);
    FComponents comps = analyze_f_components(prob);
    REQUIRE(comps.c8s.size() == 1);
    const C8Component& c8 = comps.c8s[0];
    int smallest_w = *std::min_element(c8.w.begin(), c8.w.end());
    CHECK(c8.w[0] == smallest_w);
  }
}

TEST_CASE("triangle packing, p = 2 with one P3 component") {
  // tau_cover has 4 triangles, tau keeps 3 and covers the 6 pairs of E - F
  PaddingProblem prob{2, 2, {{0, 1}, {0, 3}}};
  std::vector<Triangle> tau = pack_triangles_exact(prob);
  CHECK(tau.size() == 3);
  PackAudit audit = audit_triangles(prob, tau);
  CHECK(audit.ok());
}

TEST_CASE("triangle packing, p = 2 with two P3 components") {
  PaddingProblem prob{2, 2, {{0, 0}, {0, 2}, {1, 1}, {1, 3}}};
  std::vector<Triangle> tau = pack_triangles_exact(prob);
  CHECK(tau.size() == 2);
  CHECK(audit_triangles(prob, tau).ok());
}

TEST_CASE("triangle packing, p = 5 with one C8") {
  Rng rng(5);
  PaddingProblem prob = random_padding_problem(rng, 5, 1, 0);
  std::vector<Triangle> tau = pack_triangles_exact(prob);
  PackAudit audit = audit_triangles(prob, tau);
  CHECK(audit.ok());
  // tau_cover has 25 triangles; the C8 removes exactly 4
  CHECK(tau.size() == 21);
  SUBCASE("at most p W-pairs stay uncovered among the cross pairs") {
    std::set<std::pair<int, int>> used;
    for (const Triangle& t : tau) used.insert({std::min(t.w1, t.w2), std::max(t.w1, t.w2)});
    CHECK(25 - (int)used.size() <= 5);
  }
}

TEST_CASE("dummy-padded packing drops dummy triangles") {
  SUBCASE("single real V vertex at p = 2") {
    PaddingProblem prob{2, 1, {{0, 1}, {0, 3}}};
    std::vector<Triangle> tau = pack_triangles(prob);
    for (const Triangle& t : tau) CHECK(t.v == 0);
    CHECK(audit_triangles(prob, tau).ok());
    CHECK(tau.size() == 1);  // covers the 2 remaining pairs of the real vertex
  }
  SUBCASE("coverage of real pairs is unaffected by the dummy, p = 3") {
    Rng rng(9);
    PaddingProblem prob = random_padding_problem(rng, 3, 0, 2, 2);
    std::vector<Triangle> tau = pack_triangles(prob);
    CHECK(audit_triangles(prob, tau).ok());
  }
  SUBCASE("F must be nonempty") {
    PaddingProblem prob{3, 2, {}};
    CHECK_THROWS(pack_triangles(prob));
  }
}

TEST_CASE("triangle packing across all artifact primes and F shapes") {
  for (int p : {2, 3, 5, 7, 11, 13, 17, 23}) {
    Rng rng(1000 + p);
    for (int trial = 0; trial < 8; ++trial) {
      int max_c8 = p / 4;
      int c8s = max_c8 > 0 ? rand_int(rng, 0, max_c8) : 0;
      int p3s = rand_int(rng, c8s == 0 ? 1 : 0, p - 4 * c8s);
      PaddingProblem prob = random_padding_problem(rng, p, c8s, p3s);
      std::vector<Triangle> tau = pack_triangles_exact(prob);
      PackAudit audit = audit_triangles(prob, tau);
      CHECK(audit.edge_disjoint);
      CHECK(audit.covers_exactly);
      CHECK(audit.avoids_f);
      CHECK(audit.one_v_per_triangle);
      CHECK(audit.residual_connected);
    }
  }
}

TEST_CASE("bare cover with empty F") {
  // test-only path: every V-W pair exactly once, every used W pair crosses
  // the halves, and the residual W graph splits into the two half-cliques
  for (int p : {2, 3, 5, 7}) {
    PaddingProblem prob{p, p, {}};
    std::vector<Triangle> tau = pack_triangles_exact(prob);
    CHECK((int)tau.size() == p * p);
    PackAudit audit = audit_triangles(prob, tau);
    CHECK(audit.edge_disjoint);
    CHECK(audit.covers_exactly);
    CHECK(audit.one_v_per_triangle);
    CHECK_FALSE(audit.residual_connected);
    std::set<int> w1s, w2s;
    for (const Triangle& t : tau) {
      w1s.insert(t.w1);
      w2s.insert(t.w2);
    }
    CHECK((int)w1s.size() == p);
    CHECK((int)w2s.size() == p);
    for (int w : w1s) CHECK(w2s.count(w) == 0);
  }
}

TEST_CASE("triangle to P3 conversion") {
  InstanceBuilder b;
  int c1 = b.add_clique(plain_clique(0), 0);
  int c2 = b.add_clique(plain_clique(1), 2);
  int v = b.add_vertex(plain_vertex(0), c1);
  int w1 = b.add_vertex(plain_vertex(1), c2);
  int w2 = b.add_vertex(plain_vertex(2), c2);
  SUBCASE("no triangles, no change") {
    std::size_t edges = b.graph().edge_count();
    CHECK(triangles_to_p3s(b, {}).empty());
    CHECK(b.graph().edge_count() == edges);
  }
  SUBCASE("one triangle adds one edge and one pad P3") {
    std::vector<PackedP3> pads = triangles_to_p3s(b, {{v, w1, w2}});
    REQUIRE(pads.size() == 1);
    CHECK(pads[0].y == w1);  // the W1 member is the center
    CHECK(b.has_edge(v, w1));
    CHECK_FALSE(b.has_edge(v, w2));
    CHECK(b.pair_covered(v, w2));
    CHECK(b.p3_count(P3Role::pad) == 1);
  }
}
