#include "trireg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "trireg/constructions.hpp"

namespace trireg {

void EnumSpec::validate() const {
  const int cap = allow_large ? kDeskScaleHardCap : kDeskScaleCap;
  if (n > cap) {
    throw Error(ErrorCode::DeskScaleExceeded,
                "n=" + std::to_string(n) + " exceeds the cap " +
                    std::to_string(cap) +
                    (allow_large ? "" : " (pass the override to lift it to 14)"));
  }
  if (n < 1 || r2 < 0 || r2 >= n) {
    throw Error(ErrorCode::DegreeTooLarge,
                "need 0 <= r2 < n, got r2=" + std::to_string(r2) +
                    " n=" + std::to_string(n));
  }
  if ((static_cast<long long>(n) * r2) % 2 != 0) {
    throw Error(ErrorCode::ParityError, "n * r2 must be even");
  }
  if (filter_r3 && *filter_r3 < 0) {
    throw Error(ErrorCode::DegreeTooLarge, "filter_r3 must be non-negative");
  }
}

// ---------------------------------------------------------------------------
// Orderly generation. Vertices are appended one at a time; a partial graph
// survives iff its column-by-column upper-triangle encoding is minimal over
// all relabelings. That encoding grows by one contiguous column per added
// vertex, so minimality of a complete graph's encoding implies minimality of
// every prefix, which makes the augmentation isomorph-free with no storage.

namespace {

struct Partial {
  int k = 0;  // vertices placed so far
  std::array<uint16_t, kDeskScaleHardCap> adj{};
  std::array<int8_t, kDeskScaleHardCap> deg{};
};

// Is the identity labeling's column encoding minimal over all relabelings?
// Branches only through permutations whose columns tie the identity's;
// any strictly smaller column decides immediately.
struct CanonicalTest {
  const Partial& p;
  std::array<uint16_t, kDeskScaleHardCap> id_cols{};  // MSB-first per column
  std::array<int8_t, kDeskScaleHardCap> perm{};
  uint16_t used = 0;

  explicit CanonicalTest(const Partial& partial) : p(partial) {
    for (int j = 0; j < p.k; ++j) {
      uint16_t col = 0;
      for (int t = 0; t < j; ++t) {
        col = static_cast<uint16_t>((col << 1) | ((p.adj[j] >> t) & 1));
      }
      id_cols[j] = col;
    }
  }

  bool identity_is_min(int depth) {
    if (depth == p.k) return true;
    for (int u = 0; u < p.k; ++u) {
      if ((used >> u) & 1) continue;
      uint16_t col = 0;
      for (int t = 0; t < depth; ++t) {
        col = static_cast<uint16_t>((col << 1) | ((p.adj[u] >> perm[t]) & 1));
      }
      if (col < id_cols[depth]) return false;
      if (col > id_cols[depth]) continue;
      perm[depth] = static_cast<int8_t>(u);
      used |= uint16_t{1} << u;
      const bool ok = identity_is_min(depth + 1);
      used &= ~(uint16_t{1} << u);
      if (!ok) return false;
    }
    return true;
  }
};

bool is_col_canonical(const Partial& p) {
  if (p.k <= 2) return true;
  int twice_edges = 0;
  for (int v = 0; v < p.k; ++v) twice_edges += std::popcount(p.adj[v]);
  if (twice_edges == 0 || twice_edges == p.k * (p.k - 1)) {
    return true;  // empty / complete: every labeling encodes identically
  }
  CanonicalTest test(p);
  return test.identity_is_min(0);
}

Graph to_graph(const Partial& p) {
  GraphBuilder b(p.k);
  for (int u = 0; u < p.k; ++u) {
    for (int v = u + 1; v < p.k; ++v) {
      if ((p.adj[u] >> v) & 1) b.add_edge(u, v);
    }
  }
  return b.build();
}

struct Generator {
  const EnumSpec& spec;
  const std::function<bool(const Graph&)>& emit;
  bool stopped = false;

  void run() {
    Partial p;
    p.k = 1;
    extend(p);
  }

  void extend(Partial& p) {
    if (stopped) return;
    if (p.k == spec.n) {
      finish(p);
      return;
    }
    const int k = p.k;
    const int future_after = spec.n - k - 1;  // vertices after the new one

    uint16_t allowed = 0, required = 0;
    for (int i = 0; i < k; ++i) {
      const int deficit = spec.r2 - p.deg[i];
      if (deficit > 0) allowed |= uint16_t{1} << i;
      if (deficit == spec.n - k) required |= uint16_t{1} << i;
    }
    const int min_pick = std::max(0, spec.r2 - future_after);
    const uint16_t optional_bits = allowed & ~required;

    for (uint16_t m = optional_bits;; m = (m - 1) & optional_bits) {
      const uint16_t mask = m | required;
      const int cnt = std::popcount(mask);
      if (cnt <= spec.r2 && cnt >= min_pick) {
        apply(p, mask);
        bool feasible = true;
        if (p.k == spec.n) {
          for (int i = 0; i < p.k && feasible; ++i) feasible = p.deg[i] == spec.r2;
        }
        if (feasible && is_col_canonical(p)) extend(p);
        undo(p, mask);
        if (stopped) return;
      }
      if (m == 0) break;
    }
  }

  void apply(Partial& p, uint16_t mask) {
    const int k = p.k;
    p.adj[k] = mask;
    p.deg[k] = static_cast<int8_t>(std::popcount(mask));
    uint16_t bits = mask;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= static_cast<uint16_t>(bits - 1);
      p.adj[i] |= uint16_t{1} << k;
      ++p.deg[i];
    }
    ++p.k;
  }

  void undo(Partial& p, uint16_t mask) {
    --p.k;
    const int k = p.k;
    p.adj[k] = 0;
    p.deg[k] = 0;
    uint16_t bits = mask;
    while (bits) {
      const int i = std::countr_zero(bits);
      bits &= static_cast<uint16_t>(bits - 1);
      p.adj[i] &= ~(uint16_t{1} << k);
      --p.deg[i];
    }
  }

  void finish(const Partial& p) {
    Graph g = to_graph(p);
    if (spec.connected_only && !g.is_connected()) return;
    if (spec.filter_r3) {
      auto params = g.regularity_parameters();
      if (!params || params->r3 != *spec.filter_r3) return;
    }
    if (!emit(canonical_form(g))) stopped = true;
  }
};

}  // namespace

void enumerate_regular(const EnumSpec& spec,
                       const std::function<bool(const Graph&)>& emit) {
  spec.validate();
  Generator gen{spec, emit};
  gen.run();
}

std::vector<Graph> enumerate_regular(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate_regular(spec, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<Graph> find_with_parameters(int n, int r2, int r3,
                                        bool connected_only) {
  EnumSpec spec;
  spec.n = n;
  spec.r2 = r2;
  spec.connected_only = connected_only;
  spec.filter_r3 = r3;
  return enumerate_regular(spec);
}

TuranUniquenessReport verify_turan_uniqueness(int m, int n_max, bool allow_large) {
  if (m < 2) throw std::invalid_argument("Turan uniqueness needs m >= 2");
  const int cap = allow_large ? kDeskScaleHardCap : kDeskScaleCap;
  if (n_max > cap) {
    throw Error(ErrorCode::DeskScaleExceeded,
                "n_max exceeds the desk-scale cap " + std::to_string(cap));
  }
  const int r2 = 2 * m;
  const int r3 = 4 * (m * (m - 1) / 2);
  const Graph reference = turan(2 * m + 2, m + 1);

  TuranUniquenessReport report;
  std::vector<Graph> hits;
  for (int n = r2 + 1; n <= n_max; ++n) {
    if ((static_cast<long long>(n) * r2) % 2 != 0) continue;
    for (const Graph& g : find_with_parameters(n, r2, r3, true)) hits.push_back(g);
  }
  if (hits.size() == 1 && are_isomorphic(hits[0], reference)) {
    report.unique = true;
    return report;
  }
  for (const Graph& g : hits) {
    if (!are_isomorphic(g, reference)) {
      report.offender = g;
      break;
    }
  }
  if (!report.offender && !hits.empty()) report.offender = hits[0];
  return report;
}

// ---------------------------------------------------------------------------
// Row-major minimal form. The search walks orderings consistent with an
// ordered-partition invariant: after placing u, every cell splits into
// (non-neighbours of u, neighbours of u). Any ordering violating that has a
// strictly smaller neighbour swap, so the true minimum is always in the tree.

namespace {

struct MinKeySearch {
  const Graph& g;
  int n;
  std::string best;                // packed row-major bits of best ordering
  std::vector<int> best_assign;    // position -> original vertex
  std::vector<int> assign;

  std::string pack(const std::vector<int>& order) const {
    std::string bits((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    size_t t = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++t) {
        if (g.has_edge(order[i], order[j])) {
          bits[t / 8] |= static_cast<char>(0x80u >> (t % 8));
        }
      }
    }
    return bits;
  }

  void walk(std::vector<std::vector<int>>& cells, int depth) {
    if (depth == n) {
      std::string packed = pack(assign);
      if (best.empty() || packed < best) {
        best = std::move(packed);
        best_assign = assign;
      }
      return;
    }
    const std::vector<int> head = cells.front();
    for (int u : head) {
      assign[depth] = u;
      std::vector<std::vector<int>> split;
      split.reserve(cells.size() * 2);
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        std::vector<int> non, adj;
        for (int v : cells[ci]) {
          if (v == u) continue;
          (g.has_edge(u, v) ? adj : non).push_back(v);
        }
        if (!non.empty()) split.push_back(std::move(non));
        if (!adj.empty()) split.push_back(std::move(adj));
      }
      walk(split, depth + 1);
    }
  }
};

}  // namespace

std::string canonical_min_key(const Graph& g) {
  const int n = g.vertex_count();
  std::string key(1, static_cast<char>(n));
  if (n <= 1) return key;

  const int m = g.edge_count();
  const size_t bit_bytes = (static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8;
  if (m == 0) {
    key.append(bit_bytes, '\0');
    return key;
  }
  if (m == n * (n - 1) / 2) {
    std::string bits(bit_bytes, '\0');
    for (size_t t = 0; t < static_cast<size_t>(n) * (n - 1) / 2; ++t) {
      bits[t / 8] |= static_cast<char>(0x80u >> (t % 8));
    }
    return key + bits;
  }

  MinKeySearch search{g, n, {}, {}, std::vector<int>(n, -1)};
  std::vector<std::vector<int>> cells(1);
  for (int v = 0; v < n; ++v) cells[0].push_back(v);
  search.walk(cells, 0);
  return key + search.best;
}

Graph canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return g;
  const int m = g.edge_count();
  if (m == 0 || m == n * (n - 1) / 2) return g;

  MinKeySearch search{g, n, {}, {}, std::vector<int>(n, -1)};
  std::vector<std::vector<int>> cells(1);
  for (int v = 0; v < n; ++v) cells[0].push_back(v);
  search.walk(cells, 0);

  std::vector<int> perm(n);
  for (int pos = 0; pos < n; ++pos) perm[search.best_assign[pos]] = pos;
  return g.relabeled(perm);
}

}  // namespace trireg
