#include <doctest.h>

#include <numeric>

#include "sanecol/errors.hpp"
#include "sanecol/gadget.hpp"

using namespace sanecol;

namespace {

// Closed-form characterization: blocked iff every input shares one color
// and the output differs from it.
bool expected_extendable(std::span<const Color> boundary) {
  const auto inputs = boundary.first(boundary.size() - 1);
  const bool uniform =
      std::all_of(inputs.begin(), inputs.end(), [&](Color c) { return c == inputs[0]; });
  return !(uniform && boundary.back() != inputs[0]);
}

GadgetInstance standalone_chain(std::size_t k, GraphBuilder& builder) {
  std::vector<Vertex> inputs(k);
  std::iota(inputs.begin(), inputs.end(), 0);
  return attach_chain_gadget(builder, inputs, static_cast<Vertex>(k));
}

// Plain odometer over every internal coloring; no pruning.
bool extendable_by_odometer(const GadgetInstance& g, std::span<const Color> boundary) {
  std::vector<Color> colors(g.internal_start + g.internal_len, 0);
  for (std::size_t i = 0; i < g.boundary.size(); ++i) colors[g.boundary[i]] = boundary[i];
  std::vector<Color> internal(g.internal_len, 0);
  while (true) {
    for (std::size_t i = 0; i < internal.size(); ++i) colors[g.internal_start + i] = internal[i];
    if (std::none_of(g.added_edges.begin(), g.added_edges.end(),
                     [&](const Edge& e) { return colors[e.u] == colors[e.v]; })) {
      return true;
    }
    std::size_t pos = 0;
    while (pos < internal.size() && ++internal[pos] == 3) internal[pos++] = 0;
    if (pos == internal.size()) return false;
  }
}

}  // namespace

TEST_CASE("base gadget wiring") {
  GraphBuilder b(3);
  const auto g = attach_base_gadget(b, 0, 1, 2);
  CHECK(g.internal_start == 3);
  CHECK(g.internal_len == 2);
  CHECK(g.added_edges == std::vector<Edge>{{0, 3}, {1, 4}, {3, 4}, {2, 3}, {2, 4}});
  CHECK(b.vertex_count() == 5);
  CHECK(b.edge_count() == 5);
}

TEST_CASE("base gadget deltas are always (+2, +5)") {
  GraphBuilder b(6);
  for (Vertex x = 0; x < 4; ++x) {
    const auto v0 = b.vertex_count();
    const auto e0 = b.edge_count();
    attach_base_gadget(b, x, x + 1, x + 2);
    CHECK(b.vertex_count() - v0 == 2);
    CHECK(b.edge_count() - e0 == 5);
  }
}

TEST_CASE("gadget construction errors") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(attach_base_gadget(b, 0, 0, 2), ConstructionError);
  CHECK_THROWS_AS(attach_base_gadget(b, 0, 1, 0), ConstructionError);
  CHECK_THROWS_AS(attach_base_gadget(b, 0, 1, 7), ConstructionError);
  const Vertex one[] = {0};
  CHECK_THROWS_AS(attach_chain_gadget(b, one, 2), ConstructionError);
  const Vertex repeated[] = {0, 1, 0};
  CHECK_THROWS_AS(attach_chain_gadget(b, repeated, 2), ConstructionError);
  const Vertex into_output[] = {0, 1};
  CHECK_THROWS_AS(attach_chain_gadget(b, into_output, 1), ConstructionError);
  CHECK(b.vertex_count() == 3);
}

TEST_CASE("chain gadget size deltas") {
  struct Case {
    std::size_t k, vertices, edges;
  };
  for (const auto& c : {Case{2, 2, 5}, Case{3, 5, 10}, Case{6, 14, 25}}) {
    GraphBuilder b(c.k + 1);
    const auto g = standalone_chain(c.k, b);
    CHECK(g.internal_len == c.vertices);
    CHECK(g.added_edges.size() == c.edges);
    CHECK(b.vertex_count() == c.k + 1 + c.vertices);
  }
  for (std::size_t k = 2; k <= 20; ++k) {
    GraphBuilder b(k + 1);
    const auto g = standalone_chain(k, b);
    CHECK(g.internal_len == 3 * k - 4);
    CHECK(g.added_edges.size() == 5 * (k - 1));
    CHECK(g.internal_len <= 3 * k);
    CHECK(g.added_edges.size() <= 5 * k);
    for (const auto& e : g.added_edges) {
      CHECK((g.is_internal(e.u) || g.is_internal(e.v)));
    }
  }
}

TEST_CASE("replay reproduces attached wiring") {
  GraphBuilder b(9);
  const Vertex inputs[] = {4, 1, 7, 2};
  const auto g = attach_chain_gadget(b, inputs, 0);
  CHECK(replay_chain_gadget(g.boundary, g.internal_start) == g);
  const Vertex late[] = {0, 1, 20};
  CHECK_THROWS_AS(replay_chain_gadget(late, 10), ConstructionError);
}

TEST_CASE("semantics: the specific Lemma cases for the base gadget") {
  const auto sem = semantics_by_brute_force(2);
  CHECK(sem.size() == 27);
  const Color same_same[] = {0, 0, 0};
  const Color forced_wrong[] = {0, 0, 1};
  CHECK(sem.extendable(same_same));
  CHECK_FALSE(sem.extendable(forced_wrong));
  for (Color z = 0; z < 3; ++z) {
    const Color mixed[] = {0, 1, z};
    CHECK(sem.extendable(mixed));
  }
}

TEST_CASE("semantics: biconditional holds for every arity 2..6") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto sem = semantics_by_brute_force(k);
    std::size_t entries = 1;
    for (std::size_t i = 0; i <= k; ++i) entries *= 3;
    REQUIRE(sem.size() == entries);
    std::size_t blocked = 0;
    for (std::size_t idx = 0; idx < sem.size(); ++idx) {
      const auto boundary = sem.boundary_at(idx);
      CHECK(sem.index_of(boundary) == idx);
      CHECK(sem.extendable_at(idx) == expected_extendable(boundary));
      blocked += !sem.extendable_at(idx);
    }
    CHECK(blocked == 6);
  }
}

TEST_CASE("semantics agree with an unpruned odometer for small arities") {
  for (std::size_t k = 2; k <= 4; ++k) {
    GraphBuilder b(k + 1);
    const auto g = standalone_chain(k, b);
    const auto sem = semantics_by_brute_force(k);
    for (std::size_t idx = 0; idx < sem.size(); ++idx) {
      CHECK(sem.extendable_at(idx) == extendable_by_odometer(g, sem.boundary_at(idx)));
    }
  }
}

TEST_CASE("semantics arity range") {
  CHECK_THROWS_AS(semantics_by_brute_force(1), RangeError);
  CHECK_THROWS_AS(semantics_by_brute_force(7), RangeError);
}

TEST_CASE("extend_coloring on the base gadget") {
  GraphBuilder b(3);
  const auto g = attach_base_gadget(b, 0, 1, 2);
  const Color all_zero[] = {0, 0, 0};
  CHECK(extend_coloring(g, all_zero) == std::vector<Color>{1, 2});
  const Color distinct[] = {0, 1, 2};
  const auto ab = extend_coloring(g, distinct);
  CHECK(ab == std::vector<Color>{1, 0});
  const Color blocked[] = {0, 0, 1};
  CHECK_THROWS_AS(extend_coloring(g, blocked), ExtensionError);
  const Color bad_len[] = {0, 0};
  CHECK_THROWS_AS(extend_coloring(g, bad_len), ArgumentError);
}

TEST_CASE("property: extensions are proper for every extendable boundary, k = 2..6") {
  for (std::size_t k = 2; k <= 6; ++k) {
    GraphBuilder b(k + 1);
    const auto g = standalone_chain(k, b);
    const auto sem = semantics_by_brute_force(k);
    for (std::size_t idx = 0; idx < sem.size(); ++idx) {
      const auto boundary = sem.boundary_at(idx);
      if (!sem.extendable_at(idx)) {
        CHECK_THROWS_AS(extend_coloring(g, boundary), ExtensionError);
        continue;
      }
      const auto internal = extend_coloring(g, boundary);
      std::vector<Color> colors(boundary.begin(), boundary.end());
      colors.insert(colors.end(), internal.begin(), internal.end());
      const bool proper = std::none_of(g.added_edges.begin(), g.added_edges.end(),
                                       [&](const Edge& e) { return colors[e.u] == colors[e.v]; });
      CHECK(proper);
      CHECK(extend_coloring(g, boundary) == internal);
    }
  }
}
