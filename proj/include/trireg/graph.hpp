#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trireg/errors.hpp"

namespace trireg {

// Supported vertex count. Everything in this project is desk-scale; the cap
// keeps rows short enough that neighbourhood intersections stay word-parallel.
inline constexpr int kMaxVertices = 1024;

/// The pair (r2, r3): common vertex degree and common triangle degree.
struct Parameters {
  int r2 = 0;
  int r3 = 0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
  friend auto operator<=>(const Parameters&, const Parameters&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1 with bit-packed
/// symmetric adjacency rows. Immutable: all mutating operations return a
/// new graph (see GraphBuilder for staged construction).
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  size_t words_per_row() const { return words_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Number of triangles containing v; equals the edge count inside N(v).
  int triangle_degree(int v) const;
  /// Number of common neighbors of u and v. Throws NotAnEdge if uv is absent.
  int triangle_degree(int u, int v) const;

  /// (r2, r3) when every vertex shares one degree and one triangle degree.
  std::optional<Parameters> regularity_parameters() const;

  bool is_connected() const;

  /// Cartesian product; vertex (u, v) gets index u * other.n + v.
  Graph cartesian_product(const Graph& other) const;

  /// New graph where vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  std::span<const uint64_t> row(int v) const {
    return {rows_.data() + static_cast<size_t>(v) * words_, words_};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> rows_;  // n_ * words_, symmetric, zero diagonal

  void check_vertex(int v) const;
};

/// Staged construction / confined in-place editing; build() yields the
/// immutable value.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int vertex_count() const { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // duplicates collapse; loops -> InvalidEdge
  void remove_edge(int u, int v);  // absent edges are a no-op

  Graph build() const;

 private:
  int n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> rows_;

  void check_pair(int u, int v) const;
};

/// Edge-preserving bijection test via invariant refinement plus backtracking.
/// Intended for desk-scale graphs (n up to ~32).
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace trireg
