#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "trireg/graph.hpp"
#include "trireg/rng.hpp"

namespace trireg {

using Rational = boost::multiprecision::cpp_rational;

/// Seeded heuristic-search job description.
struct SearchConfig {
  int r2 = 0;
  int r3 = 0;
  int n = 0;
  int max_iterations = 200000;  // per-restart proposal budget
  int restarts = 32;
  int plateau_limit = 2000;  // max consecutive sideways accepted moves
  uint64_t seed = 0;

  void validate() const;  // ParityError / DegreeTooLarge; budgets must be >= 1
};

enum class SearchStatus { Found, Exhausted };

struct TracePoint {
  long long iteration;  // proposal count within the winning restart
  Rational fitness;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  Graph best_graph;
  Rational best_fitness;
  std::vector<TracePoint> fitness_trace;  // initial value plus improvements
  long long iterations_used = 0;          // summed over the restarts that ran
  int winning_restart = 0;
};

/// Simple r2-regular graph on n vertices by the pairing model: r2 stubs per
/// vertex, a uniform perfect matching of stubs, full restart on any loop or
/// multi-edge. Deterministic given the RNG state.
Graph random_regular(int n, int r2, Rng& rng);

/// Degree-preserving 2-switch: remove disjoint edges ab, cd and add ac, bd
/// (both absent beforehand). Samples uniformly; falls back to an exhaustive
/// scan to certify absence.
std::optional<Graph> two_switch(const Graph& g, Rng& rng);

/// The mutated graph with ab, cd replaced by ac, bd. Preconditions: ab, cd
/// edges on four distinct vertices; ac, bd non-edges.
Graph apply_two_switch(const Graph& g, int a, int b, int c, int d);

/// Mean over vertices of 1 / (|K3deg(v) - r3| + 1)^2, exact. Equals 1 iff
/// every vertex has triangle degree exactly r3.
Rational fitness(const Graph& g, int r3);

/// Multi-restart hill climbing with sideways moves; accepts a proposal iff
/// fitness does not decrease, restarts on plateau exhaustion, and stops the
/// moment fitness reaches 1. Deterministic given the config (restart i draws
/// from Rng(seed + i); parallel execution merges by fitness then restart
/// index, so scheduling cannot change the result).
SearchResult run_search(const SearchConfig& config);

namespace detail {

/// New triangle degrees for exactly the vertices affected by the 2-switch
/// (ab, cd) -> (ac, bd), as (vertex, new value) pairs; tri_before holds the
/// per-vertex triangle degrees of `before`. The search hot path uses this
/// instead of a full recomputation; an equivalence test pins the two.
std::vector<std::pair<int, int>> switch_triangle_updates(
    const Graph& before, const Graph& after, int a, int b, int c, int d,
    std::span<const int> tri_before);

}  // namespace detail

}  // namespace trireg
