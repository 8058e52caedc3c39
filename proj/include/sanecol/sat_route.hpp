#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sanecol/cnf.hpp"
#include "sanecol/gadget.hpp"
#include "sanecol/graph.hpp"
#include "sanecol/solver.hpp"

namespace sanecol {

/// Direct encoding of "g is k-colorable": variable i*k + j + 1 means vertex
/// i takes color j. Clauses, in order: at-least-one per vertex, pairwise
/// at-most-one per vertex, one conflict clause per edge and color.
/// kn variables and n + n*C(k,2) + ke clauses. Throws ArgumentError for k < 2.
CnfFormula encode_col_as_cnf(const Graph& g, Color k);

/// Where the pieces of a CNF formula live in its 3-coloring instance.
struct SatGraphMap {
  Vertex t = 0;
  Vertex f = 1;
  Vertex b = 2;
  std::vector<Vertex> positive;  ///< index v - 1 for variable v
  std::vector<Vertex> negative;
  /// Per clause: the vertex forced to T (the literal itself for unit clauses).
  std::vector<Vertex> clause_output;
  /// Per clause: the OR chain, absent for unit clauses.
  std::vector<std::optional<GadgetInstance>> clause_gadgets;

  Vertex literal_vertex(Literal lit) const;
};

struct SatColoringInstance {
  Graph graph;
  SatGraphMap map;
};

/// Standard SAT -> 3-COL construction. Palette triangle T, F, B; per
/// variable a pair (p, n) forming a triangle with B; per clause of width
/// w >= 2 a chain of w - 1 copy gadgets over its (deduplicated) literals
/// into a fresh output joined to F and B; unit clauses join the literal to
/// F. Throws ArgumentError on an empty or out-of-range clause.
SatColoringInstance encode_cnf_as_3col(const CnfFormula& f);

/// Variable v is true iff its positive literal vertex shares T's color.
std::vector<bool> assignment_from_coloring(const SatColoringInstance& inst, const Coloring& c3);

struct RouteSizes {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

struct SatRouteSizes {
  std::uint64_t vars = 0;
  std::uint64_t clauses = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

struct RouteDecisions {
  Decision source = Decision::indeterminate;
  Decision sane = Decision::indeterminate;
  Decision sat_route = Decision::indeterminate;

  /// No side timed out and all three agree.
  bool agree() const noexcept;
};

struct RouteComparison {
  Color k = 0;
  RouteSizes sane;
  SatRouteSizes sat_route;
  double vertex_ratio = 0;  ///< sat_route.vertices / sane.vertices
  double edge_ratio = 0;
  std::optional<RouteDecisions> decisions;
};

/// Builds both 3-coloring instances for (g, k) and compares their sizes.
/// With a budget, each instance (and g itself) is also decided.
RouteComparison compare_routes(const Graph& g, Color k, std::optional<Budget> budget = {});

/// JSON with keys sane, sat_route, ratios, decisions (null when not run).
std::string route_comparison_to_json(const RouteComparison& cmp);

}  // namespace sanecol
