#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sanecol/graph.hpp"

namespace sanecol {

/// One attached copy of the copy-gadget GAD(x1..xk, z).
///
/// `boundary` holds the inputs followed by the output z. The internal
/// vertices occupy [internal_start, internal_start + internal_len) and touch
/// only this instance's `added_edges`.
struct GadgetInstance {
  std::vector<Vertex> boundary;
  Vertex internal_start = 0;
  std::size_t internal_len = 0;
  std::vector<Edge> added_edges;

  std::size_t arity() const noexcept { return boundary.empty() ? 0 : boundary.size() - 1; }
  Vertex output() const { return boundary.back(); }
  bool is_internal(Vertex v) const noexcept {
    return v >= internal_start && v - internal_start < internal_len;
  }

  friend bool operator==(const GadgetInstance&, const GadgetInstance&) = default;
};

/// Attaches GAD(x, y, z): two fresh vertices a, b with edges
/// x-a, y-b, a-b, a-z, b-z (in that order). In any proper 3-coloring,
/// x and y sharing a color forces z to that color.
/// Throws ConstructionError unless x, y, z are distinct existing vertices.
GadgetInstance attach_base_gadget(GraphBuilder& builder, Vertex x, Vertex y, Vertex z);

/// Attaches the left-to-right chain GAD(x1,x2,y1), GAD(y1,x3,y2), ...,
/// GAD(y_{k-2},xk,z). Internals are allocated as y1,a1,b1,y2,a2,b2,...,
/// a_{k-1},b_{k-1}: 3k-4 vertices and 5(k-1) edges. k = 2 is the base gadget.
GadgetInstance attach_chain_gadget(GraphBuilder& builder, std::span<const Vertex> inputs,
                                   Vertex z);

/// Re-derives the wiring of a chain gadget whose internals start at
/// `internal_start` (used when a reduction map is read back from disk).
GadgetInstance replay_chain_gadget(std::span<const Vertex> boundary, Vertex internal_start);

/// Extendability of every boundary 3-coloring of the arity-k chain gadget.
class GadgetSemantics {
public:
  GadgetSemantics(std::size_t arity, std::vector<bool> table);

  std::size_t arity() const noexcept { return arity_; }
  /// 3^(arity+1).
  std::size_t size() const noexcept { return table_.size(); }

  /// Mixed-radix index, boundary[0] most significant.
  std::size_t index_of(std::span<const Color> boundary) const;
  /// Inverse of index_of.
  std::vector<Color> boundary_at(std::size_t index) const;

  bool extendable(std::span<const Color> boundary) const { return table_[index_of(boundary)]; }
  bool extendable_at(std::size_t index) const { return table_.at(index); }

private:
  std::size_t arity_;
  std::vector<bool> table_;
};

inline constexpr std::size_t kMinOracleArity = 2;
inline constexpr std::size_t kMaxOracleArity = 6;

/// Decides every boundary coloring of a freshly built arity-k gadget by
/// exhaustive search over the internal 3-colorings. Supports 2 <= k <= 6;
/// throws RangeError otherwise.
GadgetSemantics semantics_by_brute_force(std::size_t arity);

/// Colors the internals of `instance` given its boundary colors (all < 3).
/// Depth-first in allocation order, lowest color first, so the result is
/// deterministic. Element i is the color of internal_start + i.
/// Throws ExtensionError if no proper extension exists.
std::vector<Color> extend_coloring(const GadgetInstance& instance,
                                   std::span<const Color> boundary_colors);

}  // namespace sanecol
