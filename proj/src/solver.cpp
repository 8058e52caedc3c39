#include "sanecol/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "sanecol/errors.hpp"

namespace sanecol {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Color kUncolored = ~Color{0};

struct OutOfTime {};

class Search {
public:
  Search(const Graph& g, Color palette, Clock::time_point deadline)
      : g_(g),
        palette_(palette),
        deadline_(deadline),
        domain_(g.vertex_count(), palette == 64 ? ~Mask{0} : (Mask{1} << palette) - 1),
        color_(g.vertex_count(), kUncolored),
        stamp_(g.vertex_count(), 0) {}

  bool run() {
    std::vector<Vertex> all(g_.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return solve_set(all);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<Color>& colors() const noexcept { return color_; }

private:
  struct Mark {
    std::size_t trail;
    std::size_t colored;
    Color used;
  };

  // `set` holds uncolored vertices only, sorted ascending.
  bool solve_set(const std::vector<Vertex>& set) {
    if (set.empty()) return true;
    auto parts = components(set);
    if (parts.size() == 1) return branch(set);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& part : parts) {
      if (!branch(part)) return false;
    }
    return true;
  }

  // Connected components of the subgraph induced by `set`, each sorted, in
  // order of their lowest vertex.
  std::vector<std::vector<Vertex>> components(const std::vector<Vertex>& set) {
    const std::uint32_t member = ++generation_;
    for (const Vertex v : set) stamp_[v] = member;
    const std::uint32_t seen = ++generation_;

    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> queue;
    for (const Vertex root : set) {
      if (stamp_[root] != member) continue;
      stamp_[root] = seen;
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Vertex u : g_.neighbors(queue[head])) {
          if (stamp_[u] == member) {
            stamp_[u] = seen;
            queue.push_back(u);
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      parts.push_back(queue);
    }
    return parts;
  }

  Mask allowed() const noexcept {
    // Used colors plus the lowest unused one.
    const Color top = std::min<Color>(used_ + 1, palette_);
    return top == 64 ? ~Mask{0} : (Mask{1} << top) - 1;
  }

  bool branch(const std::vector<Vertex>& part) {
    if (Clock::now() >= deadline_) throw OutOfTime{};

    const Mask window = allowed();
    Vertex pick = part.front();
    int best = 65;
    for (const Vertex v : part) {
      const int options = std::popcount(domain_[v] & window);
      if (options < best) {
        best = options;
        pick = v;
        if (options <= 1) break;
      }
    }
    if (best == 0) return false;

    std::vector<Vertex> rest;
    rest.reserve(part.size() - 1);
    for (const Vertex v : part) {
      if (v != pick) rest.push_back(v);
    }

    for (Mask options = domain_[pick] & window; options != 0; options &= options - 1) {
      const auto c = static_cast<Color>(std::countr_zero(options));
      ++nodes_;
      const Mark mark{trail_.size(), colored_.size(), used_};
      if (assign(pick, c) && solve_set(rest)) return true;
      undo(mark);
    }
    return false;
  }

  // Colors v and prunes c from its uncolored neighbors; false on a wipeout.
  bool assign(Vertex v, Color c) {
    color_[v] = c;
    colored_.push_back(v);
    used_ = std::max(used_, c + 1);
    const Mask bit = Mask{1} << c;
    bool ok = true;
    for (const Vertex u : g_.neighbors(v)) {
      if (color_[u] != kUncolored || !(domain_[u] & bit)) continue;
      trail_.push_back({u, domain_[u]});
      domain_[u] &= ~bit;
      if (domain_[u] == 0) ok = false;
    }
    return ok;
  }

  // Rolls back every assignment and pruning made since `mark`, including
  // those of sibling components that had already been solved.
  void undo(const Mark& mark) {
    while (trail_.size() > mark.trail) {
      const auto [u, old] = trail_.back();
      trail_.pop_back();
      domain_[u] = old;
    }
    while (colored_.size() > mark.colored) {
      color_[colored_.back()] = kUncolored;
      colored_.pop_back();
    }
    used_ = mark.used;
  }

  const Graph& g_;
  Color palette_;
  Clock::time_point deadline_;
  std::vector<Mask> domain_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<std::pair<Vertex, Mask>> trail_;
  std::vector<Vertex> colored_;
  Color used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveOutcome solve(const Graph& g, Color k, Budget budget) {
  if (k == 0) throw ArgumentError("palette size must be positive");
  const auto start = Clock::now();
  const Color palette = static_cast<Color>(std::min<std::size_t>(k, std::max<std::size_t>(g.vertex_count(), 1)));
  if (palette > 64) {
    throw ArgumentError("solver supports at most 64 distinct colors, got " + std::to_string(palette));
  }

  SolveOutcome outcome;
  auto finish = [&] {
    outcome.stats.wall = Clock::now() - start;
    return outcome;
  };
  if (budget <= Budget::zero()) return finish();

  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(budget);
  Search search(g, palette, deadline);
  try {
    const bool found = search.run();
    outcome.stats.nodes = search.nodes();
    if (found) {
      outcome.status = SolveStatus::colorable;
      outcome.witness = Coloring(k, search.colors());
      if (!is_proper_coloring(g, *outcome.witness)) {
        throw InvariantViolation("solver produced an improper witness");
      }
    } else {
      outcome.status = SolveStatus::uncolorable;
    }
  } catch (const OutOfTime&) {
    outcome.status = SolveStatus::timeout;
    outcome.stats.nodes = search.nodes();
  }
  return finish();
}

Decision decide(const Graph& g, Color k, Budget budget) {
  switch (solve(g, k, budget).status) {
    case SolveStatus::colorable:
      return Decision::colorable;
    case SolveStatus::uncolorable:
      return Decision::uncolorable;
    case SolveStatus::timeout:
      break;
  }
  return Decision::indeterminate;
}

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::colorable:
      return "colorable";
    case SolveStatus::uncolorable:
      return "uncolorable";
    case SolveStatus::timeout:
      break;
  }
  return "timeout";
}

const char* to_string(Decision decision) noexcept {
  switch (decision) {
    case Decision::colorable:
      return "colorable";
    case Decision::uncolorable:
      return "uncolorable";
    case Decision::indeterminate:
      break;
  }
  return "indeterminate";
}

}  // namespace sanecol
