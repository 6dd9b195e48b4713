#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ceamp {

struct Literal {
  int variable = 0;
  bool positive = true;
  bool operator==(const Literal&) const = default;
};

// A clause may hold any number of literals after parsing; normalization
// establishes the 3-distinct-variables invariant.
struct Clause {
  std::vector<Literal> literals;
  bool operator==(const Clause&) const = default;
};

struct Formula {
  int variable_count = 0;
  std::vector<Clause> clauses;
  bool operator==(const Formula&) const = default;
};

// Total assignment: values[i] is the value of variable i.
struct Assignment {
  std::vector<bool> values;
  bool operator==(const Assignment&) const = default;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

Formula parse_dimacs(const std::string& text);
std::string to_dimacs(const Formula& f);

// True iff every clause has exactly 3 pairwise-distinct variables and every
// variable occurs in at least 2 clauses.
bool is_conforming(const Formula& f);

// Equisatisfiable normal form: dedup literals, drop tautologies, expand
// short clauses with fresh variables, duplicate clauses of once-occurring
// variables, drop unused variables. Errors on empty clauses and on clauses
// with more than 3 distinct variables.
Formula normalize(const Formula& f);

bool satisfies(const Formula& f, const Assignment& a);

// Lexicographically first satisfying assignment (x0 most significant), or
// absent. Guarded to n <= 24.
std::optional<Assignment> brute_force_sat(const Formula& f);

// Ascending clause indices containing the variable.
std::vector<int> clauses_containing(const Formula& f, int variable);

// pi(i, d): rank of clause d among the clauses containing variable i.
int occurrence_index(const Formula& f, int variable, int clause);

std::string assignment_to_text(const Assignment& a);
Assignment assignment_from_text(const std::string& text, int variable_count);

}  // namespace ceamp
