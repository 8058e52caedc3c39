#include "sanecol/sat_route.hpp"

#include <algorithm>
#include <cstdlib>
#include <json.hpp>

#include "sanecol/errors.hpp"
#include "sanecol/reduction.hpp"

namespace sanecol {

CnfFormula encode_col_as_cnf(const Graph& g, Color k) {
  if (k < 2) {
    throw ArgumentError("palette size must be at least 2, got " + std::to_string(k));
  }
  const std::size_t n = g.vertex_count();
  CnfFormula f;
  f.var_count = static_cast<std::uint32_t>(n * k);
  const auto var = [k](std::size_t i, Color j) { return static_cast<Literal>(i * k + j + 1); };

  for (std::size_t i = 0; i < n; ++i) {
    for (Color j = 0; j < k; ++j) f.annotation.emplace_back(static_cast<Vertex>(i), j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Clause some;
    for (Color j = 0; j < k; ++j) some.push_back(var(i, j));
    f.clauses.push_back(std::move(some));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (Color j1 = 0; j1 < k; ++j1) {
      for (Color j2 = j1 + 1; j2 < k; ++j2) f.clauses.push_back({-var(i, j1), -var(i, j2)});
    }
  }
  for (const auto& e : g.edges()) {
    for (Color c = 0; c < k; ++c) f.clauses.push_back({-var(e.u, c), -var(e.v, c)});
  }
  return f;
}

Vertex SatGraphMap::literal_vertex(Literal lit) const {
  const auto v = static_cast<std::size_t>(std::llabs(lit));
  if (lit == 0 || v > positive.size()) {
    throw ArgumentError("literal " + std::to_string(lit) + " out of range");
  }
  return lit > 0 ? positive[v - 1] : negative[v - 1];
}

SatColoringInstance encode_cnf_as_3col(const CnfFormula& f) {
  f.validate();

  GraphBuilder builder;
  SatGraphMap map;
  map.t = builder.add_vertex("T");
  map.f = builder.add_vertex("F");
  map.b = builder.add_vertex("B");
  builder.add_edge(map.t, map.f);
  builder.add_edge(map.t, map.b);
  builder.add_edge(map.f, map.b);

  for (std::uint32_t v = 1; v <= f.var_count; ++v) {
    const Vertex p = builder.add_vertex("x" + std::to_string(v));
    const Vertex n = builder.add_vertex("~x" + std::to_string(v));
    builder.add_edge(p, n);
    builder.add_edge(p, map.b);
    builder.add_edge(n, map.b);
    map.positive.push_back(p);
    map.negative.push_back(n);
  }

  for (const auto& clause : f.clauses) {
    std::vector<Vertex> inputs;
    for (const Literal lit : clause) {
      const Vertex v = map.literal_vertex(lit);
      if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) inputs.push_back(v);
    }
    if (inputs.size() == 1) {
      builder.add_edge(inputs.front(), map.f);
      map.clause_output.push_back(inputs.front());
      map.clause_gadgets.emplace_back();
      continue;
    }
    const Vertex out = builder.add_vertex();
    map.clause_gadgets.emplace_back(attach_chain_gadget(builder, inputs, out));
    builder.add_edge(out, map.f);
    builder.add_edge(out, map.b);
    map.clause_output.push_back(out);
  }
  return {builder.build(), std::move(map)};
}

std::vector<bool> assignment_from_coloring(const SatColoringInstance& inst, const Coloring& c3) {
  if (!is_proper_coloring(inst.graph, c3)) {
    throw ArgumentError("coloring of the SAT-route instance is not proper");
  }
  std::vector<bool> out(inst.map.positive.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = c3[inst.map.positive[v]] == c3[inst.map.t];
  }
  return out;
}

bool RouteDecisions::agree() const noexcept {
  return source != Decision::indeterminate && source == sane && source == sat_route;
}

RouteComparison compare_routes(const Graph& g, Color k, std::optional<Budget> budget) {
  const auto sane = reduce(g, k);
  const auto cnf = encode_col_as_cnf(g, k);
  const auto sat = encode_cnf_as_3col(cnf);

  RouteComparison cmp;
  cmp.k = k;
  cmp.sane = {sane.graph.vertex_count(), sane.graph.edge_count()};
  cmp.sat_route = {cnf.var_count, cnf.clauses.size(), sat.graph.vertex_count(),
                   sat.graph.edge_count()};
  cmp.vertex_ratio =
      static_cast<double>(cmp.sat_route.vertices) / static_cast<double>(cmp.sane.vertices);
  cmp.edge_ratio = static_cast<double>(cmp.sat_route.edges) / static_cast<double>(cmp.sane.edges);
  if (budget) {
    cmp.decisions = RouteDecisions{decide(g, k, *budget), decide(sane.graph, 3, *budget),
                                   decide(sat.graph, 3, *budget)};
  }
  return cmp;
}

std::string route_comparison_to_json(const RouteComparison& cmp) {
  nlohmann::ordered_json doc;
  doc["k"] = cmp.k;
  doc["sane"] = {{"vertices", cmp.sane.vertices}, {"edges", cmp.sane.edges}};
  doc["sat_route"] = {{"vars", cmp.sat_route.vars},
                      {"clauses", cmp.sat_route.clauses},
                      {"vertices", cmp.sat_route.vertices},
                      {"edges", cmp.sat_route.edges}};
  doc["ratios"] = {{"vertices", cmp.vertex_ratio}, {"edges", cmp.edge_ratio}};
  if (cmp.decisions) {
    doc["decisions"] = {{"source", to_string(cmp.decisions->source)},
                        {"sane", to_string(cmp.decisions->sane)},
                        {"sat_route", to_string(cmp.decisions->sat_route)},
                        {"agree", cmp.decisions->agree()}};
  } else {
    doc["decisions"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace sanecol
