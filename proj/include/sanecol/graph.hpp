#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sanecol {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Undirected edge in canonical form (first < second).
struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Returns the canonical form of {a, b}. Throws ArgumentError on a == b.
Edge make_edge(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once constructed: edges are canonicalised, sorted and
/// deduplicated, and the adjacency lists are built eagerly.
class Graph {
public:
  Graph() = default;

  /// Throws ArgumentError on self-loops or endpoints >= n.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Display label, empty when none was attached.
  const std::string& label(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Mutable graph under construction. Gadget builders append fresh vertices
/// and edges here; build() freezes the result into a Graph.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n = 0) : labels_(n) {}

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  Vertex add_vertex(std::string label = {});
  /// Allocates `count` consecutive vertices and returns the first index.
  Vertex add_vertices(std::size_t count);
  Edge add_edge(Vertex a, Vertex b);

  Graph build() const;

private:
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Total vertex -> color map with a palette of `palette` colors.
class Coloring {
public:
  Coloring() = default;

  /// Throws ArgumentError if palette == 0 or any color >= palette.
  Coloring(Color palette, std::vector<Color> colors);

  Color palette() const noexcept { return palette_; }
  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_.at(v); }
  std::span<const Color> colors() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

private:
  Color palette_ = 1;
  std::vector<Color> colors_;
};

/// True iff no edge of g is monochromatic under c.
/// Throws DomainError if c is not defined on exactly g's vertices.
bool is_proper_coloring(const Graph& g, const Coloring& c);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// SplitMix64 (Steele, Lea, Flood 2014). Constants:
///   state += 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) from the top 53 bits of next().
  double next_unit() noexcept;

private:
  std::uint64_t state_;
};

/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order; each consumes one SplitMix64 draw and is kept iff next_unit() < p.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace sanecol
