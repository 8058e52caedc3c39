#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "sanecol/graph.hpp"

namespace sanecol {

using Budget = std::chrono::duration<double>;

inline constexpr Budget kDefaultBudget = std::chrono::seconds(10);

enum class SolveStatus { colorable, uncolorable, timeout };

struct SolveStats {
  std::uint64_t nodes = 0;  ///< color assignments tried
  Budget wall{0};
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::timeout;
  std::optional<Coloring> witness;  ///< set iff status == colorable
  SolveStats stats;
};

/// Exact k-colorability by backtracking.
///
/// Picks the uncolored vertex with the fewest feasible colors (ties: lowest
/// index), prunes neighbor domains on every assignment, and only ever
/// introduces the lowest unused color. Once the uncolored vertices fall
/// apart into several components they are solved independently, smallest
/// first. Deterministic in everything but stats.wall.
///
/// A non-positive budget times out immediately. Throws ArgumentError for
/// k == 0 and for min(k, n) > 64.
SolveOutcome solve(const Graph& g, Color k, Budget budget = kDefaultBudget);

enum class Decision { colorable, uncolorable, indeterminate };

Decision decide(const Graph& g, Color k, Budget budget = kDefaultBudget);

const char* to_string(SolveStatus status) noexcept;
const char* to_string(Decision decision) noexcept;

}  // namespace sanecol
