#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sanecol/graph.hpp"

namespace sanecol {

/// Signed, 1-based DIMACS literal: +v is x_v, -v is not x_v.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::uint32_t var_count = 0;
  std::vector<Clause> clauses;
  /// For coloring encodings: variable v + 1 stands for (source vertex, color).
  /// Empty for formulas that did not come from a graph.
  std::vector<std::pair<Vertex, Color>> annotation;

  /// Throws ArgumentError on empty clauses, zero literals or variables
  /// beyond var_count.
  void validate() const;

  /// Compares variables and clauses; the annotation is metadata.
  friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
    return a.var_count == b.var_count && a.clauses == b.clauses;
  }
};

/// `assignment[v]` is the value of variable v + 1.
bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment);

/// `p cnf <vars> <clauses>` then one clause per line terminated by `0`.
std::string emit_dimacs_cnf(const CnfFormula& f);

/// Accepts `c` comments, clauses spanning or sharing lines, and a trailing
/// `%` section. Throws ParseError (with line number) on a missing or
/// repeated header, literals out of range, empty clauses, an unterminated
/// final clause or a clause count that disagrees with the header.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf(std::string_view text);

}  // namespace sanecol
