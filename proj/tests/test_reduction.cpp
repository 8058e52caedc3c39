#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sanecol/errors.hpp"
#include "sanecol/reduction.hpp"
#include "sanecol/solver.hpp"

using namespace sanecol;

namespace {

// Counts pieces of the construction one by one instead of using the closed form.
std::pair<std::uint64_t, std::uint64_t> counted_sizes(std::uint64_t n, std::uint64_t e,
                                                      std::uint64_t k) {
  std::uint64_t v = 3, m = 3;
  v += k * n;
  m += k * n;
  for (std::uint64_t i = 0; i < n; ++i) {
    v += (k == 2) ? 2 : (k - 2) + 2 * (k - 1);
    m += 5 * (k - 1);
    for (std::uint64_t j1 = 0; j1 < k; ++j1)
      for (std::uint64_t j2 = j1 + 1; j2 < k; ++j2) {
        v += 2;
        m += 5;
      }
  }
  v += 2 * k * e;
  m += 5 * k * e;
  return {v, m};
}

Graph edgeless(std::size_t n) { return Graph(n, {}); }

}  // namespace

TEST_CASE("reduce fixture sizes") {
  const auto r33 = reduce(complete_graph(3), 3);
  CHECK(r33.graph.vertex_count() == 63);
  CHECK(r33.graph.edge_count() == 132);
  const auto r22 = reduce(complete_graph(2), 2);
  CHECK(r22.graph.vertex_count() == 19);
  CHECK(r22.graph.edge_count() == 37);
  const auto r12 = reduce(edgeless(1), 2);
  CHECK(r12.graph.vertex_count() == 9);
  CHECK(r12.map.gadgets.size() == 2);
}

TEST_CASE("reduce rejects k < 2") {
  CHECK_THROWS_AS(reduce(complete_graph(2), 1), ArgumentError);
  CHECK_THROWS_AS(reduce(complete_graph(2), 0), ArgumentError);
}

TEST_CASE("reduction map invariants") {
  for (Color k = 2; k <= 5; ++k) {
    const auto g = gen_gnp(6, 0.5, 100 + k);
    const auto red = reduce(g, k);
    const auto& map = red.map;
    const auto& gp = red.graph;
    CHECK(gp.has_edge(map.t, map.f));
    CHECK(gp.has_edge(map.t, map.r));
    CHECK(gp.has_edge(map.f, map.r));
    CHECK(gp.label(map.t) == "T");
    std::set<Vertex> owned = {map.t, map.f, map.r};
    for (const Vertex v : map.indicator) {
      CHECK(gp.has_edge(v, map.r));
      CHECK(owned.insert(v).second);
    }
    for (const auto& [tag, gadget] : map.gadgets) {
      for (Vertex v = gadget.internal_start; v < gadget.internal_start + gadget.internal_len; ++v) {
        CHECK(owned.insert(v).second);
      }
      for (const auto& e : gadget.added_edges) CHECK(gp.has_edge(e.u, e.v));
    }
    CHECK(owned.size() == gp.vertex_count());
    CHECK(*owned.rbegin() == gp.vertex_count() - 1);
    CHECK(map.gadgets.size() == g.vertex_count() * (1 + k * (k - 1) / 2) + g.edge_count() * k);
  }
}

TEST_CASE("gadget log order and tags") {
  const auto red = reduce(complete_graph(2), 3);
  const auto& gs = red.map.gadgets;
  REQUIRE(gs.size() == 2 + 2 * 3 + 3);
  CHECK(to_string(gs[0].tag) == "alo:0");
  CHECK(gs[0].instance.boundary ==
        std::vector<Vertex>{red.map.indicator_at(0, 0), red.map.indicator_at(0, 1),
                            red.map.indicator_at(0, 2), red.map.t});
  CHECK(to_string(gs[2].tag) == "amo:0:0:1");
  CHECK(gs[2].instance.output() == red.map.f);
  CHECK(to_string(gs[8].tag) == "edge:0:1:0");
  for (const auto& tg : gs) CHECK(parse_gadget_tag(to_string(tg.tag)) == tg.tag);
  CHECK_THROWS_AS(parse_gadget_tag("alo"), ArgumentError);
  CHECK_THROWS_AS(parse_gadget_tag("edge:1:2"), ArgumentError);
  CHECK_THROWS_AS(parse_gadget_tag("amo:1:x:2"), ArgumentError);
}

TEST_CASE("reduce is deterministic") {
  const auto g = gen_gnp(7, 0.4, 9);
  const auto a = reduce(g, 4);
  const auto b = reduce(g, 4);
  CHECK(a.graph == b.graph);
  CHECK(a.map == b.map);
}

TEST_CASE("closed forms match a piecewise count and the construction") {
  for (Color k = 2; k <= 7; ++k) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto g = gen_gnp(1 + seed % 8, 0.45, seed * 31 + k);
      const auto [v, m] = counted_sizes(g.vertex_count(), g.edge_count(), k);
      const auto report = size_report(g, k);
      CHECK(report.vertices == v);
      CHECK(report.edges == m);
      CHECK(report.matches_formula());
    }
  }
}

TEST_CASE("size_report bound findings") {
  const auto r33 = size_report(complete_graph(3), 3);
  CHECK(r33.bound_vertices == 72);
  CHECK(r33.vertex_bound_holds);
  CHECK(r33.bound_edges == 99);
  CHECK_FALSE(r33.edge_bound_holds);

  const auto r22 = size_report(complete_graph(2), 2);
  CHECK(r22.bound_vertices == 20);
  CHECK(r22.vertex_bound_holds);
  CHECK(r22.bound_edges == 28);
  CHECK_FALSE(r22.edge_bound_holds);

  for (Color k = 4; k <= 8; ++k) {
    for (std::size_t n = 1; n <= 10; ++n) CHECK(size_report(edgeless(n), k).vertex_bound_holds);
  }
  CHECK(summarize(r33).find("vertices=63 edges=132") == 0);
}

TEST_CASE("lift and project on fixtures") {
  const auto k3 = complete_graph(3);
  const auto red = reduce(k3, 3);
  const Coloring c(3, {0, 1, 2});
  const auto lifted = lift_witness(k3, c, red);
  CHECK(lifted.size() == 63);
  CHECK(is_proper_coloring(red.graph, lifted));
  CHECK(project_witness(k3, red, lifted) == c);

  const auto k2 = complete_graph(2);
  const auto red2 = reduce(k2, 2);
  const auto lifted2 = lift_witness(k2, Coloring(2, {0, 1}), red2);
  CHECK(lifted2.size() == 19);
  CHECK(is_proper_coloring(red2.graph, lifted2));

  CHECK_THROWS_AS(lift_witness(k3, Coloring(3, {0, 0, 1}), red), ArgumentError);
  CHECK_THROWS_AS(lift_witness(k3, Coloring(4, {0, 1, 3}), red), ArgumentError);
}

TEST_CASE("project rejects improper or non-3 colorings") {
  const auto k3 = complete_graph(3);
  const auto red = reduce(k3, 3);
  const auto lifted = lift_witness(k3, Coloring(3, {2, 0, 1}), red);
  std::vector<Color> colors(lifted.colors().begin(), lifted.colors().end());
  colors[red.map.f] = colors[red.map.t];
  CHECK_THROWS_AS(project_witness(k3, red, Coloring(3, colors)), ArgumentError);
  CHECK_THROWS_AS(project_witness(complete_graph(2), red, Coloring(3, colors)), ArgumentError);
}

TEST_CASE("project survives a permuted palette") {
  const auto g = cycle_graph(5);
  const auto red = reduce(g, 3);
  const Coloring c(3, {0, 1, 0, 1, 2});
  const auto lifted = lift_witness(g, c, red);
  std::vector<Color> permuted;
  for (const Color x : lifted.colors()) permuted.push_back((x + 1) % 3);
  CHECK(project_witness(g, red, Coloring(3, permuted)) == c);
}

TEST_CASE("property: project(lift(c)) == c for every proper coloring of small graphs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : oracle::nonisomorphic_graphs(n)) {
      for (Color k = 2; k <= 3; ++k) {
        const auto red = reduce(g, k);
        for (const auto& c : oracle::all_proper_colorings(g, k)) {
          const auto lifted = lift_witness(g, c, red);
          REQUIRE(is_proper_coloring(red.graph, lifted));
          CHECK(project_witness(g, red, lifted) == c);
        }
      }
    }
  }
}

TEST_CASE("solver-found colorings of G' project to proper colorings") {
  const auto k3 = complete_graph(3);
  const auto red = reduce(k3, 3);
  const auto outcome = solve(red.graph, 3);
  REQUIRE(outcome.status == SolveStatus::colorable);
  const auto projected = project_witness(k3, red, *outcome.witness);
  CHECK(is_proper_coloring(k3, projected));
}

TEST_CASE("equivalence on all graphs with n <= 5, k in {2,3,4}") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::nonisomorphic_graphs(n)) {
      for (Color k = 2; k <= 4; ++k) {
        const bool source = oracle::colorable_by_enumeration(g, k);
        const auto reduced = decide(reduce(g, k).graph, 3);
        CHECK(reduced == (source ? Decision::colorable : Decision::uncolorable));
      }
    }
  }
}

TEST_CASE("reduction map JSON round trip") {
  const auto g = gen_gnp(5, 0.5, 3);
  const auto red = reduce(g, 3);
  const auto text = reduction_map_to_json(red.map);
  CHECK(text.find("\"k\"") < text.find("\"n\""));
  CHECK(text.find("\"r\"") < text.find("\"indicator\""));
  CHECK(text.find("\"indicator\"") < text.find("\"gadgets\""));
  const auto back = reduction_map_from_json(text);
  CHECK(back == red.map);
  CHECK(reduction_map_to_json(back) == text);

  CHECK_THROWS_AS(reduction_map_from_json("{"), ParseError);
  CHECK_THROWS_AS(reduction_map_from_json(R"({"k":2})"), ParseError);
  auto broken = text;
  broken.replace(broken.find("\"internal_len\": 2"), 17, "\"internal_len\": 3");
  CHECK_THROWS_AS(reduction_map_from_json(broken), ParseError);
}
