#include "sanecol/dimacs.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>

#include "sanecol/errors.hpp"

namespace sanecol {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_unsigned(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs_col(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") {
      continue;
    }
    if (tok[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <n> <e>'");
      }
      const auto count = to_unsigned(tok[2], line_no);
      to_unsigned(tok[3], line_no);
      if (count > std::numeric_limits<Vertex>::max()) {
        throw ParseError(line_no, "vertex count too large");
      }
      n = static_cast<std::size_t>(count);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge line before problem line");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const auto u = to_unsigned(tok[1], line_no);
      const auto v = to_unsigned(tok[2], line_no);
      if (u == 0 || v == 0 || u > *n || v > *n) {
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(*n));
      }
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
    } else {
      throw ParseError(line_no, "unrecognised line '" + line + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  return Graph(*n, std::move(edges));
}

Graph parse_dimacs_col(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_col(in);
}

std::string emit_dimacs_col(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

std::string emit_witness(const Coloring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v) {
    out += "v " + std::to_string(v + 1) + " " + std::to_string(c[static_cast<Vertex>(v)]) + "\n";
  }
  return out;
}

std::vector<Color> parse_witness(std::istream& in, std::size_t n) {
  std::vector<std::optional<Color>> seen(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok.size() != 3 || tok[0] != "v") throw ParseError(line_no, "expected 'v <vertex> <color>'");
    const auto v = to_unsigned(tok[1], line_no);
    const auto color = to_unsigned(tok[2], line_no);
    if (v == 0 || v > n) throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    if (color > std::numeric_limits<Color>::max()) throw ParseError(line_no, "color too large");
    if (seen[v - 1]) throw ParseError(line_no, "vertex " + std::to_string(v) + " colored twice");
    seen[v - 1] = static_cast<Color>(color);
  }
  std::vector<Color> colors(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw ParseError(line_no, "vertex " + std::to_string(v + 1) + " has no color");
    colors[v] = *seen[v];
  }
  return colors;
}

}  // namespace sanecol
