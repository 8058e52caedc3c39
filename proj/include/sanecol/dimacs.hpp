#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sanecol/graph.hpp"

namespace sanecol {

/// Reads DIMACS `.col`: `c` comments, exactly one `p edge <n> <e>` header,
/// then `e <u> <v>` lines (1-indexed). Duplicate edges collapse; the
/// header's edge count is informational only.
/// Throws ParseError with the offending line number.
Graph parse_dimacs_col(std::istream& in);
Graph parse_dimacs_col(std::string_view text);

/// Canonical `.col` text: header then sorted 1-indexed `e u v` lines, LF endings.
std::string emit_dimacs_col(const Graph& g);

/// Coloring witness: one `v <vertex 1-indexed> <color 0-indexed>` line per
/// vertex, in vertex order.
std::string emit_witness(const Coloring& c);

/// Returns the raw color of every vertex 0..n-1. Colors are not checked
/// against any palette here. Throws ParseError on malformed, duplicate,
/// out-of-range or missing vertices.
std::vector<Color> parse_witness(std::istream& in, std::size_t n);

}  // namespace sanecol
