#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sanecol/gadget.hpp"
#include "sanecol/graph.hpp"

namespace sanecol {

/// Which constraint of the construction a gadget enforces.
enum class GadgetRole {
  at_least_one,   ///< GAD(v_i1..v_ik, T): source vertex i takes some color
  at_most_one,    ///< GAD(v_ij1, v_ij2, F): source vertex i takes at most one color
  edge_conflict,  ///< GAD(v_uc, v_vc, F): endpoints of edge (u,v) differ on color c
};

struct GadgetTag {
  GadgetRole role = GadgetRole::at_least_one;
  Vertex source = 0;    ///< i, or u for edge_conflict
  Vertex other = 0;     ///< v for edge_conflict
  Color first = 0;      ///< j1, or c for edge_conflict
  Color second = 0;     ///< j2

  friend bool operator==(const GadgetTag&, const GadgetTag&) = default;
};

/// Compact text form: `alo:i`, `amo:i:j1:j2`, `edge:u:v:c`.
std::string to_string(const GadgetTag& tag);
/// Throws ArgumentError on malformed input.
GadgetTag parse_gadget_tag(const std::string& text);

struct TaggedGadget {
  GadgetTag tag;
  GadgetInstance instance;

  friend bool operator==(const TaggedGadget&, const TaggedGadget&) = default;
};

/// Bookkeeping from the 3-coloring instance back to the source graph.
struct ReductionMap {
  Color k = 0;
  std::size_t n = 0;
  std::size_t e = 0;
  Vertex t = 0;
  Vertex f = 1;
  Vertex r = 2;
  /// Row-major n x k table of indicator vertices v_ij.
  std::vector<Vertex> indicator;
  std::vector<TaggedGadget> gadgets;

  Vertex indicator_at(Vertex i, Color j) const { return indicator.at(std::size_t{i} * k + j); }

  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

/// Builds the 3-colorability instance G' for "is g k-colorable?".
///
/// Vertex numbering is fixed: T, F, R; then v_ij row-major; then gadget
/// internals in attachment order (at-least-one per i, at-most-one per i and
/// j1 < j2, edge-conflict per sorted edge and color). Throws ArgumentError
/// for k < 2.
Reduction reduce(const Graph& g, Color k);

/// Translates a proper k-coloring of g into a proper 3-coloring of G'
/// (T = 0, F = 1, R = 2). Throws ArgumentError if c is not a proper
/// k-coloring of g, InvariantViolation if a gadget refuses to extend.
Coloring lift_witness(const Graph& g, const Coloring& c, const Reduction& reduction);

/// Reads a k-coloring of g off any proper 3-coloring of G'.
/// Throws ArgumentError if c3 is not a proper 3-coloring of G',
/// InvariantViolation if some source vertex has zero or several indicators
/// colored like T.
Coloring project_witness(const Graph& g, const Reduction& reduction, const Coloring& c3);

/// Closed-form sizes of G' and the bounds claimed for it.
std::uint64_t formula_vertices(std::uint64_t n, std::uint64_t e, std::uint64_t k);
std::uint64_t formula_edges(std::uint64_t n, std::uint64_t e, std::uint64_t k);
std::uint64_t claimed_vertex_bound(std::uint64_t n, std::uint64_t e, std::uint64_t k);
std::uint64_t claimed_edge_bound(std::uint64_t n, std::uint64_t e, std::uint64_t k);

struct SizeReport {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t formula_vertices = 0;
  std::uint64_t formula_edges = 0;
  std::uint64_t bound_vertices = 0;
  std::uint64_t bound_edges = 0;
  bool vertex_bound_holds = false;
  bool edge_bound_holds = false;

  bool matches_formula() const noexcept {
    return vertices == formula_vertices && edges == formula_edges;
  }
};

SizeReport size_report(const Graph& g, Color k);
SizeReport size_report(const Graph& g, const Reduction& reduction);

/// One-line human summary, e.g. for the CLI.
std::string summarize(const SizeReport& report);

/// Sidecar JSON with keys k, n, e, t, f, r, indicator, gadgets (in that order).
std::string reduction_map_to_json(const ReductionMap& map);
/// Inverse of reduction_map_to_json; gadget wiring is replayed from each
/// boundary and internal_start. Throws ParseError on malformed documents.
ReductionMap reduction_map_from_json(const std::string& text);

}  // namespace sanecol
