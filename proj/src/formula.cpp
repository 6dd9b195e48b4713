#include "ceamp/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ceamp/check.hpp"

namespace ceamp {

Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  Formula f;
  std::vector<Literal> current;
  bool in_clause = false;
  int clause_start_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok[0] == '%') break;
    if (tok == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string fmt;
      int n = -1, m = -1;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing tokens after header");
      f.variable_count = n;
      declared_clauses = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause data before 'p cnf' header");
    // literal tokens; the first token was already consumed
    std::istringstream again(line);
    int lit;
    while (again >> lit) {
      if (lit == 0) {
        f.clauses.push_back(Clause{current});
        current.clear();
        in_clause = false;
        continue;
      }
      int var = std::abs(lit) - 1;
      if (var >= f.variable_count)
        throw ParseError(line_no, "literal " + std::to_string(std::abs(lit)) + " out of range");
      if (!in_clause) {
        in_clause = true;
        clause_start_line = line_no;
      }
      current.push_back(Literal{var, lit > 0});
    }
    if (!again.eof()) throw ParseError(line_no, "unexpected token in clause data");
  }
  if (in_clause)
    throw ParseError(clause_start_line, "clause missing terminating 0");
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if ((int)f.clauses.size() != declared_clauses)
    throw ParseError(line_no, "clause count mismatch: header declares " +
                                  std::to_string(declared_clauses) + ", found " +
                                  std::to_string(f.clauses.size()));
  return f;
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals) out << (l.positive ? l.variable + 1 : -(l.variable + 1)) << " ";
    out << "0\n";
  }
  return out.str();
}

bool is_conforming(const Formula& f) {
  std::vector<int> occurrences(f.variable_count, 0);
  for (const Clause& c : f.clauses) {
    if (c.literals.size() != 3) return false;
    std::set<int> vars;
    for (const Literal& l : c.literals) {
      if (l.variable < 0 || l.variable >= f.variable_count) return false;
      vars.insert(l.variable);
    }
    if (vars.size() != 3) return false;
    for (int v : vars) ++occurrences[v];
  }
  for (int v = 0; v < f.variable_count; ++v)
    if (occurrences[v] < 2) return false;
  return true;
}

Formula normalize(const Formula& f) {
  Formula g;
  g.variable_count = f.variable_count;

  // (1) deduplicate identical literals, (2) drop tautologies
  for (const Clause& c : f.clauses) {
    std::vector<Literal> lits;
    bool tautology = false;
    for (const Literal& l : c.literals) {
      require(l.variable >= 0 && l.variable < f.variable_count, "literal variable out of range");
      bool dup = false;
      for (const Literal& k : lits) {
        if (k.variable == l.variable) {
          if (k.positive == l.positive) dup = true;
          else tautology = true;
        }
      }
      if (!dup) lits.push_back(l);
    }
    if (tautology) continue;
    require(!lits.empty(), "unsatisfiable clause");
    g.clauses.push_back(Clause{lits});
  }

  // (3) expand clauses with fewer than 3 distinct variables
  for (std::size_t idx = 0; idx < g.clauses.size();) {
    std::size_t k = g.clauses[idx].literals.size();
    require(k <= 3, "clause has more than 3 distinct variables; input is not 3-CNF");
    if (k == 3) {
      ++idx;
      continue;
    }
    int fresh = g.variable_count++;
    Clause with_pos = g.clauses[idx];
    with_pos.literals.push_back(Literal{fresh, true});
    Clause with_neg = g.clauses[idx];
    with_neg.literals.push_back(Literal{fresh, false});
    g.clauses[idx] = with_pos;
    g.clauses.insert(g.clauses.begin() + idx + 1, with_neg);
    // stay at idx: a unit clause needs a second expansion round
  }

  // (4) duplicate a clause for every variable occurring exactly once
  for (;;) {
    std::vector<int> occurrences(g.variable_count, 0);
    for (const Clause& c : g.clauses)
      for (const Literal& l : c.literals) ++occurrences[l.variable];
    int lonely = -1;
    for (int v = 0; v < g.variable_count; ++v)
      if (occurrences[v] == 1) { lonely = v; break; }
    if (lonely < 0) break;
    for (const Clause& c : g.clauses) {
      bool contains = false;
      for (const Literal& l : c.literals) contains |= l.variable == lonely;
      if (contains) { g.clauses.push_back(c); break; }
    }
  }

  // drop variables that occur in no clause, compacting indices
  std::vector<int> occurrences(g.variable_count, 0);
  for (const Clause& c : g.clauses)
    for (const Literal& l : c.literals) ++occurrences[l.variable];
  std::vector<int> remap(g.variable_count, -1);
  int next = 0;
  for (int v = 0; v < g.variable_count; ++v)
    if (occurrences[v] > 0) remap[v] = next++;
  if (next != g.variable_count) {
    for (Clause& c : g.clauses)
      for (Literal& l : c.literals) l.variable = remap[l.variable];
    g.variable_count = next;
  }
  return g;
}

bool satisfies(const Formula& f, const Assignment& a) {
  require((int)a.values.size() == f.variable_count, "assignment is not total");
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (const Literal& l : c.literals) sat |= a.values[l.variable] == l.positive;
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> brute_force_sat(const Formula& f) {
  require(f.variable_count <= 24, "brute_force_sat: refusing formulas with more than 24 variables");
  int n = f.variable_count;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Assignment a;
    a.values.resize(n);
    for (int i = 0; i < n; ++i) a.values[i] = (mask >> (n - 1 - i)) & 1;  // x0 most significant
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

std::vector<int> clauses_containing(const Formula& f, int variable) {
  std::vector<int> out;
  for (int d = 0; d < (int)f.clauses.size(); ++d)
    for (const Literal& l : f.clauses[d].literals)
      if (l.variable == variable) { out.push_back(d); break; }
  return out;
}

int occurrence_index(const Formula& f, int variable, int clause) {
  std::vector<int> occ = clauses_containing(f, variable);
  auto it = std::find(occ.begin(), occ.end(), clause);
  require(it != occ.end(), "variable x" + std::to_string(variable) + " does not occur in clause " +
                               std::to_string(clause));
  return (int)(it - occ.begin());
}

std::string assignment_to_text(const Assignment& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out << "x" << i << " " << (a.values[i] ? "true" : "false") << "\n";
  return out.str();
}

Assignment assignment_from_text(const std::string& text, int variable_count) {
  Assignment a;
  a.values.assign(variable_count, false);
  std::vector<bool> seen(variable_count, false);
  std::istringstream in(text);
  std::string name, value;
  while (in >> name >> value) {
    require(name.size() >= 2 && name[0] == 'x', "bad assignment line: " + name);
    int idx = std::stoi(name.substr(1));
    require(idx >= 0 && idx < variable_count, "assignment variable out of range: " + name);
    require(!seen[idx], "duplicate assignment for " + name);
    require(value == "true" || value == "false", "bad truth value: " + value);
    seen[idx] = true;
    a.values[idx] = value == "true";
  }
  for (int i = 0; i < variable_count; ++i)
    require(seen[i], "assignment missing variable x" + std::to_string(i));
  return a;
}

}  // namespace ceamp
