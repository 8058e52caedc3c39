#include "sanecol/reduction.hpp"

#include <sstream>

#include "sanecol/errors.hpp"

namespace sanecol {
namespace {

constexpr Color kTrue = 0;
constexpr Color kFalse = 1;
constexpr Color kReserved = 2;

std::vector<std::uint32_t> split_fields(const std::string& text, char sep) {
  std::vector<std::uint32_t> out;
  std::size_t start = text.find(sep);
  while (start != std::string::npos) {
    const std::size_t end = text.find(sep, start + 1);
    const std::string field = text.substr(start + 1, end == std::string::npos ? end : end - start - 1);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ArgumentError("malformed gadget tag '" + text + "'");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    start = end;
  }
  return out;
}

}  // namespace

std::string to_string(const GadgetTag& tag) {
  switch (tag.role) {
    case GadgetRole::at_least_one:
      return "alo:" + std::to_string(tag.source);
    case GadgetRole::at_most_one:
      return "amo:" + std::to_string(tag.source) + ":" + std::to_string(tag.first) + ":" +
             std::to_string(tag.second);
    case GadgetRole::edge_conflict:
      return "edge:" + std::to_string(tag.source) + ":" + std::to_string(tag.other) + ":" +
             std::to_string(tag.first);
  }
  throw InvariantViolation("unknown gadget role");
}

GadgetTag parse_gadget_tag(const std::string& text) {
  const std::string head = text.substr(0, text.find(':'));
  const auto fields = split_fields(text, ':');
  GadgetTag tag;
  if (head == "alo" && fields.size() == 1) {
    tag.role = GadgetRole::at_least_one;
    tag.source = fields[0];
  } else if (head == "amo" && fields.size() == 3) {
    tag.role = GadgetRole::at_most_one;
    tag.source = fields[0];
    tag.first = fields[1];
    tag.second = fields[2];
  } else if (head == "edge" && fields.size() == 3) {
    tag.role = GadgetRole::edge_conflict;
    tag.source = fields[0];
    tag.other = fields[1];
    tag.first = fields[2];
  } else {
    throw ArgumentError("malformed gadget tag '" + text + "'");
  }
  return tag;
}

Reduction reduce(const Graph& g, Color k) {
  if (k < 2) {
    throw ArgumentError("palette size must be at least 2, got " + std::to_string(k));
  }
  const std::size_t n = g.vertex_count();

  GraphBuilder builder;
  ReductionMap map;
  map.k = k;
  map.n = n;
  map.e = g.edge_count();

  // Palette triangle.
  map.t = builder.add_vertex("T");
  map.f = builder.add_vertex("F");
  map.r = builder.add_vertex("R");
  builder.add_edge(map.t, map.f);
  builder.add_edge(map.t, map.r);
  builder.add_edge(map.f, map.r);

  // Indicators v_ij, each barred from R so it reads as T or F.
  map.indicator.reserve(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (Color j = 0; j < k; ++j) {
      const Vertex v = builder.add_vertex("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      builder.add_edge(v, map.r);
      map.indicator.push_back(v);
    }
  }

  const auto row = [&](std::size_t i) {
    return std::span<const Vertex>(map.indicator).subspan(i * k, k);
  };

  // At least one indicator per source vertex is T.
  for (std::size_t i = 0; i < n; ++i) {
    GadgetTag tag{GadgetRole::at_least_one, static_cast<Vertex>(i)};
    map.gadgets.push_back({tag, attach_chain_gadget(builder, row(i), map.t)});
  }

  // At most one indicator per source vertex is T.
  for (std::size_t i = 0; i < n; ++i) {
    for (Color j1 = 0; j1 < k; ++j1) {
      for (Color j2 = j1 + 1; j2 < k; ++j2) {
        GadgetTag tag{GadgetRole::at_most_one, static_cast<Vertex>(i), 0, j1, j2};
        map.gadgets.push_back(
            {tag, attach_base_gadget(builder, row(i)[j1], row(i)[j2], map.f)});
      }
    }
  }

  // Adjacent source vertices never share a color.
  for (const auto& edge : g.edges()) {
    for (Color c = 0; c < k; ++c) {
      GadgetTag tag{GadgetRole::edge_conflict, edge.u, edge.v, c};
      map.gadgets.push_back(
          {tag, attach_base_gadget(builder, row(edge.u)[c], row(edge.v)[c], map.f)});
    }
  }

  return {builder.build(), std::move(map)};
}

Coloring lift_witness(const Graph& g, const Coloring& c, const Reduction& reduction) {
  const auto& map = reduction.map;
  if (g.vertex_count() != map.n || g.edge_count() != map.e) {
    throw ArgumentError("source graph does not match the reduction map");
  }
  if (!is_proper_coloring(g, c)) {
    throw ArgumentError("source coloring is not proper");
  }
  for (const Color col : c.colors()) {
    if (col >= map.k) {
      throw ArgumentError("source coloring uses color " + std::to_string(col) +
                          " outside palette of " + std::to_string(map.k));
    }
  }

  constexpr Color kUnset = 3;
  std::vector<Color> out(reduction.graph.vertex_count(), kUnset);
  out[map.t] = kTrue;
  out[map.f] = kFalse;
  out[map.r] = kReserved;
  for (Vertex i = 0; i < map.n; ++i) {
    for (Color j = 0; j < map.k; ++j) {
      out[map.indicator_at(i, j)] = c[i] == j ? kTrue : kFalse;
    }
  }

  std::vector<Color> boundary;
  for (const auto& [tag, gadget] : map.gadgets) {
    boundary.clear();
    for (const Vertex b : gadget.boundary) {
      if (out[b] == kUnset) {
        throw InvariantViolation("gadget " + to_string(tag) + " has an uncolored boundary");
      }
      boundary.push_back(out[b]);
    }
    std::vector<Color> internal;
    try {
      internal = extend_coloring(gadget, boundary);
    } catch (const ExtensionError&) {
      throw InvariantViolation("gadget " + to_string(tag) + " rejects a proper source coloring");
    }
    for (std::size_t off = 0; off < internal.size(); ++off) {
      out[gadget.internal_start + off] = internal[off];
    }
  }

  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] == kUnset) {
      throw InvariantViolation("vertex " + std::to_string(v) + " left uncolored by lifting");
    }
  }
  Coloring lifted(3, std::move(out));
  if (!is_proper_coloring(reduction.graph, lifted)) {
    throw InvariantViolation("lifted coloring is not proper");
  }
  return lifted;
}

Coloring project_witness(const Graph& g, const Reduction& reduction, const Coloring& c3) {
  const auto& map = reduction.map;
  if (g.vertex_count() != map.n || g.edge_count() != map.e) {
    throw ArgumentError("source graph does not match the reduction map");
  }
  if (c3.palette() > 3 || !is_proper_coloring(reduction.graph, c3)) {
    throw ArgumentError("reduced-instance coloring is not a proper 3-coloring");
  }

  const Color true_color = c3[map.t];
  std::vector<Color> out(map.n);
  for (Vertex i = 0; i < map.n; ++i) {
    std::size_t hits = 0;
    for (Color j = 0; j < map.k; ++j) {
      if (c3[map.indicator_at(i, j)] == true_color) {
        out[i] = j;
        ++hits;
      }
    }
    if (hits != 1) {
      throw InvariantViolation("source vertex " + std::to_string(i) + " has " +
                               std::to_string(hits) + " indicators colored T");
    }
  }
  Coloring projected(map.k, std::move(out));
  if (!is_proper_coloring(g, projected)) {
    throw InvariantViolation("projected coloring is not proper");
  }
  return projected;
}

// Triangle 3/3; indicators kn and kn R-edges; chains n(3k-4)/n*5(k-1);
// at-most-one n*C(k,2)*(2,5); edge gadgets e*k*(2,5).
std::uint64_t formula_vertices(std::uint64_t n, std::uint64_t e, std::uint64_t k) {
  return 3 + n * (k * k + 3 * k - 4) + 2 * k * e;
}

std::uint64_t formula_edges(std::uint64_t n, std::uint64_t e, std::uint64_t k) {
  return 3 + n * (5 * k * k + 7 * k - 10) / 2 + 5 * k * e;
}

std::uint64_t claimed_vertex_bound(std::uint64_t n, std::uint64_t e, std::uint64_t k) {
  return 2 * k * k * n + 2 * k * e;
}

std::uint64_t claimed_edge_bound(std::uint64_t n, std::uint64_t e, std::uint64_t k) {
  return 3 * k * k * n + 2 * k * e;
}

SizeReport size_report(const Graph& g, const Reduction& reduction) {
  const std::uint64_t n = g.vertex_count();
  const std::uint64_t e = g.edge_count();
  const std::uint64_t k = reduction.map.k;
  SizeReport report;
  report.vertices = reduction.graph.vertex_count();
  report.edges = reduction.graph.edge_count();
  report.formula_vertices = formula_vertices(n, e, k);
  report.formula_edges = formula_edges(n, e, k);
  report.bound_vertices = claimed_vertex_bound(n, e, k);
  report.bound_edges = claimed_edge_bound(n, e, k);
  report.vertex_bound_holds = report.vertices <= report.bound_vertices;
  report.edge_bound_holds = report.edges <= report.bound_edges;
  return report;
}

SizeReport size_report(const Graph& g, Color k) { return size_report(g, reduce(g, k)); }

std::string summarize(const SizeReport& r) {
  std::ostringstream out;
  out << "vertices=" << r.vertices << " edges=" << r.edges
      << " formula_vertices=" << r.formula_vertices << " formula_edges=" << r.formula_edges
      << " bound_vertices=" << r.bound_vertices
      << (r.vertex_bound_holds ? " (holds)" : " (exceeded)") << " bound_edges=" << r.bound_edges
      << (r.edge_bound_holds ? " (holds)" : " (exceeded)");
  return out.str();
}

}  // namespace sanecol
