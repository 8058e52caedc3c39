#include "sanecol/gadget.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "sanecol/errors.hpp"

namespace sanecol {
namespace {

constexpr Color kColors = 3;

void require_distinct_existing(const GraphBuilder& builder, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= builder.vertex_count()) {
      throw ConstructionError("gadget boundary vertex " + std::to_string(vertices[i]) +
                              " does not exist");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) {
        throw ConstructionError("gadget boundary vertex " + std::to_string(vertices[i]) +
                                " repeated");
      }
    }
  }
}

// Adjacency of a gadget's internals, split into neighbors on the boundary
// (by boundary position) and neighbors among the internals (by offset).
class LocalView {
public:
  explicit LocalView(const GadgetInstance& g)
      : boundary_nbrs_(g.internal_len), internal_nbrs_(g.internal_len) {
    auto boundary_pos = [&](Vertex v) -> std::size_t {
      const auto it = std::find(g.boundary.begin(), g.boundary.end(), v);
      if (it == g.boundary.end()) {
        throw InvariantViolation("gadget edge leaves the gadget at vertex " + std::to_string(v));
      }
      return static_cast<std::size_t>(it - g.boundary.begin());
    };
    for (const auto& e : g.added_edges) {
      const bool ui = g.is_internal(e.u);
      const bool vi = g.is_internal(e.v);
      if (ui && vi) {
        internal_nbrs_[e.u - g.internal_start].push_back(e.v - g.internal_start);
        internal_nbrs_[e.v - g.internal_start].push_back(e.u - g.internal_start);
      } else if (ui) {
        boundary_nbrs_[e.u - g.internal_start].push_back(boundary_pos(e.v));
      } else if (vi) {
        boundary_nbrs_[e.v - g.internal_start].push_back(boundary_pos(e.u));
      } else {
        throw InvariantViolation("gadget edge between two boundary vertices");
      }
    }
  }

  // Fills `out` with the first extension in lowest-color-first DFS order.
  bool search(std::span<const Color> boundary, std::vector<Color>& out) const {
    out.assign(internal_nbrs_.size(), kColors);
    return assign(0, boundary, out);
  }

private:
  bool assign(std::size_t i, std::span<const Color> boundary, std::vector<Color>& out) const {
    if (i == out.size()) return true;
    for (Color c = 0; c < kColors; ++c) {
      const bool clash =
          std::any_of(boundary_nbrs_[i].begin(), boundary_nbrs_[i].end(),
                      [&](std::size_t b) { return boundary[b] == c; }) ||
          std::any_of(internal_nbrs_[i].begin(), internal_nbrs_[i].end(),
                      [&](std::size_t j) { return out[j] == c; });
      if (clash) continue;
      out[i] = c;
      if (assign(i + 1, boundary, out)) return true;
    }
    out[i] = kColors;
    return false;
  }

  std::vector<std::vector<std::size_t>> boundary_nbrs_;
  std::vector<std::vector<std::size_t>> internal_nbrs_;
};

}  // namespace

GadgetInstance attach_base_gadget(GraphBuilder& builder, Vertex x, Vertex y, Vertex z) {
  const Vertex boundary[] = {x, y, z};
  require_distinct_existing(builder, boundary);

  GadgetInstance g;
  g.boundary = {x, y, z};
  g.internal_start = builder.add_vertices(2);
  g.internal_len = 2;
  const Vertex a = g.internal_start;
  const Vertex b = a + 1;
  g.added_edges = {builder.add_edge(x, a), builder.add_edge(y, b), builder.add_edge(a, b),
                   builder.add_edge(a, z), builder.add_edge(b, z)};
  return g;
}

GadgetInstance attach_chain_gadget(GraphBuilder& builder, std::span<const Vertex> inputs,
                                   Vertex z) {
  const std::size_t k = inputs.size();
  if (k < 2) {
    throw ConstructionError("chain gadget needs at least 2 inputs, got " + std::to_string(k));
  }
  std::vector<Vertex> boundary(inputs.begin(), inputs.end());
  boundary.push_back(z);
  require_distinct_existing(builder, boundary);
  if (k == 2) {
    return attach_base_gadget(builder, inputs[0], inputs[1], z);
  }

  GadgetInstance g;
  g.boundary = std::move(boundary);
  g.internal_start = static_cast<Vertex>(builder.vertex_count());
  Vertex carry = inputs[0];
  for (std::size_t i = 1; i < k; ++i) {
    const Vertex out = (i + 1 == k) ? z : builder.add_vertex();
    auto step = attach_base_gadget(builder, carry, inputs[i], out);
    g.added_edges.insert(g.added_edges.end(), step.added_edges.begin(), step.added_edges.end());
    carry = out;
  }
  g.internal_len = builder.vertex_count() - g.internal_start;
  return g;
}

GadgetInstance replay_chain_gadget(std::span<const Vertex> boundary, Vertex internal_start) {
  if (boundary.size() < 3) {
    throw ConstructionError("gadget boundary needs at least 2 inputs and an output");
  }
  if (std::any_of(boundary.begin(), boundary.end(),
                  [&](Vertex v) { return v >= internal_start; })) {
    throw ConstructionError("gadget boundary must precede its internal vertices");
  }
  GraphBuilder scratch(internal_start);
  return attach_chain_gadget(scratch, boundary.first(boundary.size() - 1), boundary.back());
}

GadgetSemantics::GadgetSemantics(std::size_t arity, std::vector<bool> table)
    : arity_(arity), table_(std::move(table)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i <= arity_; ++i) expected *= kColors;
  if (table_.size() != expected) {
    throw ArgumentError("semantics table must have 3^(k+1) entries");
  }
}

std::size_t GadgetSemantics::index_of(std::span<const Color> boundary) const {
  if (boundary.size() != arity_ + 1) {
    throw ArgumentError("boundary coloring has wrong length");
  }
  std::size_t index = 0;
  for (const Color c : boundary) {
    if (c >= kColors) throw ArgumentError("boundary color outside {0,1,2}");
    index = index * kColors + c;
  }
  return index;
}

std::vector<Color> GadgetSemantics::boundary_at(std::size_t index) const {
  std::vector<Color> out(arity_ + 1);
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Color>(index % kColors);
    index /= kColors;
  }
  return out;
}

GadgetSemantics semantics_by_brute_force(std::size_t arity) {
  if (arity < kMinOracleArity || arity > kMaxOracleArity) {
    throw RangeError("oracle supports arities " + std::to_string(kMinOracleArity) + ".." +
                     std::to_string(kMaxOracleArity) + ", got " + std::to_string(arity));
  }
  GraphBuilder builder(arity + 1);
  std::vector<Vertex> inputs(arity);
  for (std::size_t i = 0; i < arity; ++i) inputs[i] = static_cast<Vertex>(i);
  const auto gadget = attach_chain_gadget(builder, inputs, static_cast<Vertex>(arity));
  const LocalView view(gadget);

  std::size_t entries = 1;
  for (std::size_t i = 0; i <= arity; ++i) entries *= kColors;

  std::vector<bool> table(entries);
  std::vector<Color> boundary(arity + 1, 0);
  std::vector<Color> scratch;
  for (std::size_t index = 0; index < entries; ++index) {
    table[index] = view.search(boundary, scratch);
    // Odometer, last position fastest, to match index_of.
    for (std::size_t pos = boundary.size(); pos-- > 0;) {
      if (++boundary[pos] < kColors) break;
      boundary[pos] = 0;
    }
  }
  return GadgetSemantics(arity, std::move(table));
}

std::vector<Color> extend_coloring(const GadgetInstance& instance,
                                   std::span<const Color> boundary_colors) {
  if (boundary_colors.size() != instance.boundary.size()) {
    throw ArgumentError("boundary coloring has wrong length");
  }
  if (std::any_of(boundary_colors.begin(), boundary_colors.end(),
                  [](Color c) { return c >= kColors; })) {
    throw ArgumentError("boundary color outside {0,1,2}");
  }
  std::vector<Color> out;
  if (!LocalView(instance).search(boundary_colors, out)) {
    throw ExtensionError("boundary coloring does not extend into the gadget");
  }
  return out;
}

}  // namespace sanecol
