#include "sanecol/graph.hpp"

#include <algorithm>

#include "sanecol/errors.hpp"

namespace sanecol {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw ArgumentError("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), adjacency_(n), labels_(std::move(labels)) {
  for (auto& e : edges_) {
    e = make_edge(e.u, e.v);
    if (e.v >= n) {
      throw ArgumentError("edge endpoint " + std::to_string(e.v) + " out of range for n = " +
                          std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw ArgumentError("label count does not match vertex count");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a >= vertex_count() || b >= vertex_count()) {
    return false;
  }
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

const std::string& Graph::label(Vertex v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_.at(v);
}

Vertex GraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(labels_.size() - 1);
}

Vertex GraphBuilder::add_vertices(std::size_t count) {
  const auto first = static_cast<Vertex>(labels_.size());
  labels_.resize(labels_.size() + count);
  return first;
}

Edge GraphBuilder::add_edge(Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  if (e.v >= vertex_count()) {
    throw ArgumentError("edge endpoint " + std::to_string(e.v) + " not yet allocated");
  }
  edges_.push_back(e);
  return e;
}

Graph GraphBuilder::build() const {
  const bool any_label =
      std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
  return Graph(vertex_count(), edges_, any_label ? labels_ : std::vector<std::string>{});
}

Coloring::Coloring(Color palette, std::vector<Color> colors)
    : palette_(palette), colors_(std::move(colors)) {
  if (palette_ == 0) {
    throw ArgumentError("palette size must be positive");
  }
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] >= palette_) {
      throw ArgumentError("vertex " + std::to_string(v) + " has color " +
                          std::to_string(colors_[v]) + " outside palette of " +
                          std::to_string(palette_));
    }
  }
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count()) {
    throw DomainError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                      std::to_string(g.vertex_count()));
  }
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return c[e.u] == c[e.v]; });
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw ArgumentError("a simple cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
  }
  return Graph(n, std::move(edges));
}

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) {
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace sanecol
