#pragma once

// Brute-force oracles for tests. These deliberately avoid the bit-packed
// kernels and count by iterating vertex tuples, so they stay an independent
// route against the library's word-parallel path.

#include <algorithm>
#include <numeric>
#include <vector>

#include "trireg/graph.hpp"
#include "trireg/rng.hpp"

namespace trireg::testing {

inline long long brute_triangle_count(const Graph& g) {
  const int n = g.vertex_count();
  long long total = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, c) && g.has_edge(b, c)) ++total;
      }
    }
  }
  return total;
}

inline int brute_triangle_degree(const Graph& g, int v) {
  const int n = g.vertex_count();
  int count = 0;
  for (int a = 0; a < n; ++a) {
    if (a == v || !g.has_edge(v, a)) continue;
    for (int b = a + 1; b < n; ++b) {
      if (b == v) continue;
      if (g.has_edge(v, b) && g.has_edge(a, b)) ++count;
    }
  }
  return count;
}

inline int brute_common_neighbors(const Graph& g, int u, int v) {
  int count = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++count;
  }
  return count;
}

inline int brute_degree(const Graph& g, int v) {
  int count = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w != v && g.has_edge(v, w)) ++count;
  }
  return count;
}

/// (r2, r3) by pure brute force, or nullopt.
inline std::optional<Parameters> brute_parameters(const Graph& g) {
  const int n = g.vertex_count();
  const int r2 = brute_degree(g, 0);
  const int r3 = brute_triangle_degree(g, 0);
  for (int v = 1; v < n; ++v) {
    if (brute_degree(g, v) != r2 || brute_triangle_degree(g, v) != r3) {
      return std::nullopt;
    }
  }
  return Parameters{r2, r3};
}

/// G(n, p) with p = num/den, deterministic under the given RNG.
inline Graph random_graph(int n, uint64_t num, uint64_t den, Rng& rng) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(den) < num) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// Isomorphism by trying all n! bijections; n <= 8 or so.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u) {
      for (int v = u + 1; v < n && match; ++v) {
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph petersen() {
  return Graph::from_edge_list(
      10, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

}  // namespace trireg::testing
