#include "trireg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "trireg/kernels.hpp"

namespace trireg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::IndivisibleParts: return "IndivisibleParts";
    case ErrorCode::UnknownGraph: return "UnknownGraph";
    case ErrorCode::InvalidRecipe: return "InvalidRecipe";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

namespace {

size_t words_for(int n) { return (static_cast<size_t>(n) + 63) / 64; }

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex count " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
  check_vertex_count(n);
  rows_.assign(static_cast<size_t>(n_) * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), words_(g.words_), rows_(g.rows_) {}

void GraphBuilder::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "endpoint outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidEdge,
                "self-loop at vertex " + std::to_string(u));
  }
}

bool GraphBuilder::has_edge(int u, int v) const {
  check_pair(u, v);
  return (rows_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
  rows_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
}

void GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[static_cast<size_t>(u) * words_ + v / 64] &= ~(uint64_t{1} << (v % 64));
  rows_[static_cast<size_t>(v) * words_ + u / 64] &= ~(uint64_t{1} << (u % 64));
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.rows_ = rows_;
  return g;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." +
                    std::to_string(n_ - 1));
  }
}

int Graph::edge_count() const {
  return static_cast<int>(kern::popcount_words(rows_.data(), rows_.size()) / 2);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (rows_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(kern::popcount_words(row(v).data(), words_));
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  auto r = row(v);
  for (size_t w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

int Graph::triangle_degree(int v) const {
  check_vertex(v);
  // Half the sum of edge triangle degrees over incident edges (the vertex /
  // edge handshake identity); keeps a single word-parallel code path.
  uint64_t twice = 0;
  auto rv = row(v);
  for (size_t w = 0; w < words_; ++w) {
    uint64_t bits = rv[w];
    while (bits) {
      int u = static_cast<int>(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      twice += kern::and_popcount(rv.data(), row(u).data(), words_);
    }
  }
  return static_cast<int>(twice / 2);
}

int Graph::triangle_degree(int u, int v) const {
  if (!has_edge(u, v)) {
    throw Error(ErrorCode::NotAnEdge, std::to_string(u) + "-" +
                                          std::to_string(v) + " is not an edge");
  }
  return static_cast<int>(kern::and_popcount(row(u).data(), row(v).data(), words_));
}

std::optional<Parameters> Graph::regularity_parameters() const {
  if (n_ == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const int r2 = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != r2) return std::nullopt;
  }
  const int r3 = triangle_degree(0);
  for (int v = 1; v < n_; ++v) {
    if (triangle_degree(v) != r3) return std::nullopt;
  }
  return Parameters{r2, r3};
}

bool Graph::is_connected() const {
  if (n_ == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  std::vector<uint64_t> visited(words_, 0), frontier(words_, 0);
  visited[0] = frontier[0] = 1;
  for (;;) {
    std::vector<uint64_t> next(words_, 0);
    for (size_t w = 0; w < words_; ++w) {
      uint64_t bits = frontier[w];
      while (bits) {
        int v = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        auto rv = row(v);
        for (size_t x = 0; x < words_; ++x) next[x] |= rv[x];
      }
    }
    bool grew = false;
    for (size_t x = 0; x < words_; ++x) {
      frontier[x] = next[x] & ~visited[x];
      visited[x] |= next[x];
      grew = grew || frontier[x];
    }
    if (!grew) break;
  }
  return kern::popcount_words(visited.data(), words_) ==
         static_cast<uint64_t>(n_);
}

Graph Graph::cartesian_product(const Graph& other) const {
  if (n_ == 0 || other.n_ == 0) {
    throw Error(ErrorCode::EmptyFactor, "cartesian product of an empty factor");
  }
  const long long total = static_cast<long long>(n_) * other.n_;
  if (total > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange,
                "product has " + std::to_string(total) + " vertices (cap " +
                    std::to_string(kMaxVertices) + ")");
  }
  GraphBuilder b(static_cast<int>(total));
  const int nh = other.n_;
  for (const auto& [u, u2] : edges()) {
    for (int v = 0; v < nh; ++v) b.add_edge(u * nh + v, u2 * nh + v);
  }
  for (const auto& [v, v2] : other.edges()) {
    for (int u = 0; u < n_; ++u) b.add_edge(u * nh + v, u * nh + v2);
  }
  return b.build();
}

Graph Graph::relabeled(std::span<const int> perm) const {
  GraphBuilder b(n_);
  for (const auto& [u, v] : edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    auto ru = row(u);
    for (size_t w = static_cast<size_t>(u) / 64; w < words_; ++w) {
      uint64_t bits = ru[w];
      if (w == static_cast<size_t>(u) / 64) {
        // keep only v > u within this word
        int shift = u % 64;
        bits &= shift == 63 ? 0 : ~((uint64_t{2} << shift) - 1);
      }
      while (bits) {
        int v = static_cast<int>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism: joint colour refinement seeded by (degree, triangle degree),
// then backtracking over colour-compatible assignments.

namespace {

struct Refinement {
  std::vector<int> colors_a;
  std::vector<int> colors_b;
  bool compatible = false;
};

Refinement refine(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  Refinement out;
  out.colors_a.resize(n);
  out.colors_b.resize(n);

  // Seed with (degree, triangle degree) ranked jointly across both graphs.
  {
    std::map<std::pair<int, int>, int> rank;
    for (int v = 0; v < n; ++v) {
      rank.emplace(std::pair{a.degree(v), a.triangle_degree(v)}, 0);
      rank.emplace(std::pair{b.degree(v), b.triangle_degree(v)}, 0);
    }
    int next = 0;
    for (auto& kv : rank) kv.second = next++;
    for (int v = 0; v < n; ++v) {
      out.colors_a[v] = rank.at({a.degree(v), a.triangle_degree(v)});
      out.colors_b[v] = rank.at({b.degree(v), b.triangle_degree(v)});
    }
  }

  auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
    std::vector<int> sig{col[v]};
    for (int u : g.neighbors(v)) sig.push_back(col[u]);
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };

  for (;;) {
    std::map<std::vector<int>, int> rank;
    std::vector<std::vector<int>> sig_a(n), sig_b(n);
    for (int v = 0; v < n; ++v) {
      sig_a[v] = signature(a, out.colors_a, v);
      sig_b[v] = signature(b, out.colors_b, v);
      rank.emplace(sig_a[v], 0);
      rank.emplace(sig_b[v], 0);
    }
    int next = 0;
    for (auto& kv : rank) kv.second = next++;
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v) {
      na[v] = rank.at(sig_a[v]);
      nb[v] = rank.at(sig_b[v]);
    }
    if (na == out.colors_a && nb == out.colors_b) break;
    out.colors_a = std::move(na);
    out.colors_b = std::move(nb);
  }

  std::vector<int> count_a, count_b;
  auto tally = [n](const std::vector<int>& col, std::vector<int>& cnt) {
    cnt.assign(n == 0 ? 1 : 2 * n, 0);
    for (int c : col) {
      if (c >= static_cast<int>(cnt.size())) cnt.resize(c + 1, 0);
      ++cnt[c];
    }
  };
  tally(out.colors_a, count_a);
  tally(out.colors_b, count_b);
  out.compatible = count_a == count_b;
  return out;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& colors_a;
  const std::vector<int>& colors_b;
  std::vector<int> order;     // vertices of a in assignment order
  std::vector<int> map_ab;    // -1 while unassigned
  std::vector<bool> used_b;

  bool consistent(int v, int w, int depth) const {
    for (int i = 0; i < depth; ++i) {
      int x = order[i];
      if (a.has_edge(v, x) != b.has_edge(w, map_ab[x])) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == a.vertex_count()) return true;
    int v = order[depth];
    for (int w = 0; w < b.vertex_count(); ++w) {
      if (used_b[w] || colors_b[w] != colors_a[v]) continue;
      if (!consistent(v, w, depth)) continue;
      map_ab[v] = w;
      used_b[w] = true;
      if (extend(depth + 1)) return true;
      used_b[w] = false;
      map_ab[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  if (n == 0) return true;

  Refinement ref = refine(a, b);
  if (!ref.compatible) return false;

  // Assign rare colours first.
  std::vector<int> class_size(*std::max_element(ref.colors_a.begin(),
                                                ref.colors_a.end()) + 1, 0);
  for (int c : ref.colors_a) ++class_size[c];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    auto kx = std::tuple{class_size[ref.colors_a[x]], ref.colors_a[x], x};
    auto ky = std::tuple{class_size[ref.colors_a[y]], ref.colors_a[y], y};
    return kx < ky;
  });

  IsoSearch search{a, b, ref.colors_a, ref.colors_b, std::move(order),
                   std::vector<int>(n, -1), std::vector<bool>(n, false)};
  return search.extend(0);
}

}  // namespace trireg
