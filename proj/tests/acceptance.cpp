// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

#include "ceamp/reduction.hpp"
#include "ceamp/solver.hpp"
#include "ceamp/transform.hpp"
#include "ceamp/verifier.hpp"
#include "support.hpp"

using namespace ceamp;
using namespace ceamp::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  [%d] %s%s%s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Corpus {
  std::vector<Formula> satisfiable;    // n <= 6, m <= 10, certified satisfiable
  std::vector<Formula> mixed;          // n <= 4, m <= 8, the fixed 50-formula corpus
  std::vector<Formula> by_n[7];        // per-n corpora for the incidence criterion
};

Corpus build_corpus() {
  Corpus corpus;
  Rng rng(0xCEA19);
  while (corpus.satisfiable.size() < 100) {
    Formula f = random_conforming_formula(rng, 6, 10);
    if (brute_force_sat(f)) corpus.satisfiable.push_back(f);
  }
  corpus.mixed.push_back(contradiction_formula());
  Rng rng_mixed(0xCEA20);
  int want_unsat = 10;
  while (corpus.mixed.size() < 50) {
    Formula f = random_conforming_formula(rng_mixed, 4, 8);
    bool sat = brute_force_sat(f).has_value();
    if (!sat) --want_unsat;
    // bias towards keeping the rarer unsatisfiable formulas
    if (sat && (int)corpus.mixed.size() >= 50 - std::max(want_unsat, 0)) continue;
    corpus.mixed.push_back(f);
  }
  Rng rng_sizes(0xCEA21);
  for (int n = 3; n <= 6; ++n)
    while ((int)corpus.by_n[n].size() < 5) {
      Formula f = random_conforming_formula(rng_sizes, n, 8);
      if (f.variable_count == n) corpus.by_n[n].push_back(f);
    }
  return corpus;
}

// criterion 1: reduce -> encode -> verify_solution, all checks exact
void criterion_completeness(const Corpus& corpus) {
  int checked = 0;
  std::string detail;
  bool pass = true;
  double worst_seconds = 0;
  for (const Formula& f : corpus.satisfiable) {
    auto started = Clock::now();
    Instance inst = reduce(f).instance;
    std::optional<Assignment> a = brute_force_sat(f);
    if (!a) {
      pass = false;
      detail = "corpus formula lost its certificate";
      break;
    }
    std::vector<Edit> edits = encode_solution(inst, *a);
    Report r = verify_solution(inst, edits);
    if (!r.all_pass() || edits.size() != inst.packing.size()) {
      pass = false;
      detail = "verification failed on formula " + std::to_string(checked);
      break;
    }
    worst_seconds = std::max(
        worst_seconds, std::chrono::duration<double>(Clock::now() - started).count());
    ++checked;
  }
  if (pass && worst_seconds > 10.0) {
    pass = false;
    detail = "slowest formula took " + std::to_string(worst_seconds) + " s";
  }
  if (pass)
    detail = std::to_string(checked) + " formulas, slowest " +
             std::to_string(worst_seconds) + " s";
  report(1, "completeness round-trip", pass, detail);
}

// criterion 2: decode(encode(a)) = a for every satisfying assignment
void criterion_soundness(const Corpus& corpus) {
  int round_trips = 0;
  bool pass = true;
  std::string detail;
  for (const Formula& f : corpus.satisfiable) {
    Instance inst = reduce(f).instance;
    for (const Assignment& a : all_satisfying_assignments(f)) {
      std::vector<Edit> edits = encode_solution(inst, a);
      Assignment back = decode_assignment(inst, edits);
      if (!(back == a) || !satisfies(f, back)) {
        pass = false;
        detail = "round trip diverged";
        break;
      }
      ++round_trips;
    }
    if (!pass) break;
  }
  if (pass) detail = std::to_string(round_trips) + " round trips";
  report(2, "soundness round-trip", pass, detail);
}

// criterion 3: zero-excess feasibility equals satisfiability
void criterion_equivalence(const Corpus& corpus) {
  bool pass = true;
  std::string detail;
  int sat_count = 0, unsat_count = 0;
  for (std::size_t i = 0; i < corpus.mixed.size() && pass; ++i) {
    const Formula& f = corpus.mixed[i];
    bool sat = brute_force_sat(f).has_value();
    (sat ? sat_count : unsat_count)++;
    Instance inst = reduce(f).instance;
    SolveResult r = solve_zero_excess(inst, 120.0);
    if (r.status == SolveStatus::timeout) {
      pass = false;
      detail = "timeout on formula " + std::to_string(i);
    } else if ((r.status == SolveStatus::feasible) != sat) {
      pass = false;
      detail = "feasibility mismatch on formula " + std::to_string(i);
    } else if (sat) {
      Assignment a = decode_assignment(inst, r.edits);
      if (!satisfies(f, a)) {
        pass = false;
        detail = "witness decodes to a falsifying assignment";
      }
    }
  }
  if (pass && unsat_count == 0) {
    pass = false;
    detail = "corpus contains no unsatisfiable formulas";
  }
  if (pass)
    detail = std::to_string(sat_count) + " satisfiable / " + std::to_string(unsat_count) +
             " unsatisfiable, incl. the 8-clause contradiction";
  report(3, "reduction equivalence at desk scale", pass, detail);
}

// criterion 4: the triangle padding tool under exhaustive pair enumeration
void criterion_padding_tool() {
  bool pass = true;
  std::string detail;
  int configs = 0;
  double worst_seconds = 0;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 23}) {
    Rng rng(40000 + p);
    int max_c8 = p / 4;
    for (int trial = 0; trial < 20 && pass; ++trial) {
      // sweep 0 C8s, max C8s and mixed configurations
      int c8s = max_c8 == 0 ? 0 : (trial % 3 == 0 ? 0 : (trial % 3 == 1 ? max_c8 : rand_int(rng, 0, max_c8)));
      int lo = c8s == 0 ? 1 : 0;
      int p3s = rand_int(rng, lo, p - 4 * c8s);
      auto started = Clock::now();
      PaddingProblem prob = random_padding_problem(rng, p, c8s, p3s);
      std::vector<Triangle> tau = pack_triangles_exact(prob);
      PackAudit audit = audit_triangles(prob, tau);
      worst_seconds = std::max(
          worst_seconds, std::chrono::duration<double>(Clock::now() - started).count());
      if (!audit.ok()) {
        pass = false;
        detail = "audit failed at p = " + std::to_string(p) + ", trial " + std::to_string(trial);
      }
      ++configs;
    }
  }
  if (pass && worst_seconds > 1.0) {
    pass = false;
    detail = "slowest configuration took " + std::to_string(worst_seconds) + " s";
  }
  if (pass) detail = std::to_string(configs) + " configurations across 8 primes";
  report(4, "triangle padding suite", pass, detail);
}

// criterion 5: the exact clique size table on every reduced instance
void criterion_sizes(const Corpus& corpus, const std::vector<Instance>& instances) {
  bool pass = true;
  std::string detail;
  int cliques_checked = 0;
  for (const Instance& inst : instances) {
    Report r = verify_structure(inst);
    const CheckResult* sizes = r.find("structure.sizes");
    if (!sizes || !sizes->pass) {
      pass = false;
      detail = sizes ? sizes->witness : "missing check";
      break;
    }
    cliques_checked += (int)inst.cliques.size();
  }
  (void)corpus;
  if (pass) detail = std::to_string(cliques_checked) + " cliques across all corpora";
  report(5, "clique size table", pass, detail);
}

// criterion 6: full structural verification on every reduced instance
void criterion_structure(const std::vector<Instance>& instances) {
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < instances.size() && pass; ++i) {
    Report packing = verify_packing(instances[i]);
    Report structure = verify_structure(instances[i]);
    if (!packing.all_pass() || !structure.all_pass()) {
      pass = false;
      for (const Report* r : {&packing, &structure})
        for (const CheckResult& c : r->checks)
          if (!c.pass) detail = c.check + ": " + c.witness;
      detail = "instance " + std::to_string(i) + ": " + detail;
    }
  }
  if (pass) detail = std::to_string(instances.size()) + " instances pass all checks";
  report(6, "structural invariants", pass, detail);
}

// criterion 7: solver vs oracle, and the packing lower bound
void criterion_oracles() {
  bool pass = true;
  std::string detail;
  Rng rng(0xCEA77);
  int compared = 0;
  while (compared < 100 && pass) {
    int n = rand_int(rng, 4, 9);
    Graph g = random_graph(rng, n, rand_int(rng, 25, 70) / 100.0);
    std::vector<PackedP3> h = greedy_packing(g);
    if (rand_int(rng, 0, 1)) h.resize(h.size() / 2);
    std::vector<int> proto = proto_clusters(g, h);
    int blocks = proto.empty() ? 0 : *std::max_element(proto.begin(), proto.end()) + 1;
    if (blocks > 10) continue;
    ++compared;
    auto oracle = brute_force_partition_solve(g, h);
    Instance inst = synthetic_instance(g, h);
    SolveResult r = solve_zero_excess(inst);
    if ((r.status == SolveStatus::feasible) != oracle.has_value()) {
      pass = false;
      detail = "solver/oracle disagreement on instance " + std::to_string(compared);
    } else if (r.status == SolveStatus::feasible && !verify_solution(inst, r.edits).all_pass()) {
      pass = false;
      detail = "solver witness failed verification";
    }
  }
  int bounds = 0;
  Rng rng2(0xCEA78);
  while (bounds < 100 && pass) {
    Graph g = random_graph(rng2, rand_int(rng2, 4, 10), 0.5);
    std::vector<PackedP3> h = greedy_packing(g);
    auto minimum = brute_force_cluster_editing(g, g.vertex_count() * g.vertex_count());
    if (!minimum || minimum->size() < h.size()) {
      pass = false;
      detail = "packing lower bound violated";
    }
    ++bounds;
  }
  if (pass)
    detail = std::to_string(compared) + " solver/oracle comparisons, " +
             std::to_string(bounds) + " lower-bound checks";
  report(7, "oracle equivalence and packing lower bound", pass, detail);
}

// criterion 8: the per-vertex incidence constant is stable across sizes
void criterion_incidence(const Corpus& corpus) {
  bool pass = true;
  std::string detail;
  int constant = -1;
  for (int n = 3; n <= 6 && pass; ++n) {
    for (const Formula& f : corpus.by_n[n]) {
      Stats s = instance_stats(reduce(f).instance);
      if (constant < 0) constant = s.max_p3_incidence;
      if (s.max_p3_incidence != constant) {
        pass = false;
        detail = "n = " + std::to_string(n) + " yields " +
                 std::to_string(s.max_p3_incidence) + " instead of " + std::to_string(constant);
      }
    }
  }
  if (pass) detail = "constant = " + std::to_string(constant) + " across n = 3..6";
  report(8, "constant per-vertex incidence", pass, detail);
}

}  // namespace

int main() {
  Corpus corpus = build_corpus();

  std::vector<Instance> reduced_all;
  for (const Formula& f : corpus.satisfiable) reduced_all.push_back(reduce(f).instance);
  for (const Formula& f : corpus.mixed) reduced_all.push_back(reduce(f).instance);
  for (int n = 3; n <= 6; ++n)
    for (const Formula& f : corpus.by_n[n]) reduced_all.push_back(reduce(f).instance);

  criterion_completeness(corpus);
  criterion_soundness(corpus);
  criterion_equivalence(corpus);
  criterion_padding_tool();
  criterion_sizes(corpus, reduced_all);
  criterion_structure(reduced_all);
  criterion_oracles();
  criterion_incidence(corpus);

  if (failures == 0) std::printf("all acceptance criteria pass\n");
  else std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
