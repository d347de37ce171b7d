#include "trireg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace trireg {

namespace {

Rational term(int tri, int r3) {
  const long long k = std::abs(static_cast<long long>(tri) - r3) + 1;
  return Rational(1, k * k);
}

int thread_cap() {
  if (const char* env = std::getenv("TRIREG_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return hw >= 1 ? hw : 1;
}

}  // namespace

void SearchConfig::validate() const {
  if (n < 1 || r2 < 0 || r2 >= n) {
    throw Error(ErrorCode::DegreeTooLarge,
                "need 0 <= r2 < n, got r2=" + std::to_string(r2) +
                    " n=" + std::to_string(n));
  }
  if ((static_cast<long long>(n) * r2) % 2 != 0) {
    throw Error(ErrorCode::ParityError, "n * r2 must be even");
  }
  if (r3 < 0 || max_iterations < 1 || restarts < 1 || plateau_limit < 1) {
    throw std::invalid_argument("search budgets and r3 must be positive");
  }
}

Graph random_regular(int n, int r2, Rng& rng) {
  if (n < 1 || r2 < 0 || r2 >= n) {
    throw Error(ErrorCode::DegreeTooLarge,
                "need 0 <= r2 < n, got r2=" + std::to_string(r2) +
                    " n=" + std::to_string(n));
  }
  if ((static_cast<long long>(n) * r2) % 2 != 0) {
    throw Error(ErrorCode::ParityError, "n * r2 must be even");
  }
  if (r2 == 0) return GraphBuilder(n).build();

  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * r2);
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < r2; ++s) stubs.push_back(v);
  }

  constexpr int kMaxAttempts = 1000000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng.below(i + 1)]);
    }
    GraphBuilder b(n);
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v || b.has_edge(u, v)) {
        simple = false;
        break;
      }
      b.add_edge(u, v);
    }
    if (simple) {
      Graph g = b.build();
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != r2) {
          throw Error(ErrorCode::GenerationFailed, "pairing model degree check failed");
        }
      }
      return g;
    }
  }
  throw Error(ErrorCode::GenerationFailed,
              "pairing model did not produce a simple graph");
}

Graph apply_two_switch(const Graph& g, int a, int b, int c, int d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) {
    throw Error(ErrorCode::InvalidEdge, "2-switch needs four distinct vertices");
  }
  if (!g.has_edge(a, b) || !g.has_edge(c, d)) {
    throw Error(ErrorCode::NotAnEdge, "2-switch removes edges that must exist");
  }
  if (g.has_edge(a, c) || g.has_edge(b, d)) {
    throw Error(ErrorCode::InvalidEdge, "2-switch would create a multi-edge");
  }
  GraphBuilder mutated(g);
  mutated.remove_edge(a, b);
  mutated.remove_edge(c, d);
  mutated.add_edge(a, c);
  mutated.add_edge(b, d);
  return mutated.build();
}

namespace {

struct SwitchPick {
  int a, b, c, d;
  size_t e1, e2;
};

bool valid_switch(const Graph& g, int a, int b, int c, int d) {
  if (a == c || a == d || b == c || b == d) return false;
  return !g.has_edge(a, c) && !g.has_edge(b, d);
}

std::optional<SwitchPick> pick_two_switch(
    const Graph& g, const std::vector<std::pair<int, int>>& edges, Rng& rng) {
  const size_t m = edges.size();
  if (m < 2) return std::nullopt;

  const size_t attempts = 32 + 8 * m;
  for (size_t t = 0; t < attempts; ++t) {
    const size_t i = rng.below(m), j = rng.below(m);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (rng.coin()) std::swap(c, d);
    if (valid_switch(g, a, b, c, d)) return SwitchPick{a, b, c, d, i, j};
  }

  // Exhaustive scan: certifies absence, otherwise picks uniformly among the
  // remaining valid switches.
  std::vector<SwitchPick> valid;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      for (int orient = 0; orient < 2; ++orient) {
        const int c = orient ? edges[j].second : edges[j].first;
        const int d = orient ? edges[j].first : edges[j].second;
        if (valid_switch(g, a, b, c, d)) valid.push_back({a, b, c, d, i, j});
      }
    }
  }
  if (valid.empty()) return std::nullopt;
  return valid[rng.below(valid.size())];
}

}  // namespace

std::optional<Graph> two_switch(const Graph& g, Rng& rng) {
  const auto edges = g.edges();
  auto pick = pick_two_switch(g, edges, rng);
  if (!pick) return std::nullopt;
  return apply_two_switch(g, pick->a, pick->b, pick->c, pick->d);
}

namespace detail {

std::vector<std::pair<int, int>> switch_triangle_updates(
    const Graph& before, const Graph& after, int a, int b, int c, int d,
    std::span<const int> tri_before) {
  std::vector<std::pair<int, int>> changed;
  changed.reserve(8);
  for (int v : {a, b, c, d}) changed.emplace_back(v, after.triangle_degree(v));

  // Other vertices keep their neighbourhoods; their triangle counts move only
  // through the four swapped pairs, all inside row bits of a, b, c, d.
  const size_t words = before.words_per_row();
  for (size_t w = 0; w < words; ++w) {
    uint64_t bits = before.row(a)[w] | before.row(b)[w] | before.row(c)[w] |
                    before.row(d)[w];
    while (bits) {
      const int x = static_cast<int>(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      if (x == a || x == b || x == c || x == d) continue;
      int delta = 0;
      const bool xa = before.has_edge(x, a), xb = before.has_edge(x, b);
      const bool xc = before.has_edge(x, c), xd = before.has_edge(x, d);
      if (xa && xb) --delta;
      if (xc && xd) --delta;
      if (xa && xc) ++delta;
      if (xb && xd) ++delta;
      if (delta != 0) changed.emplace_back(x, tri_before[x] + delta);
    }
  }
  return changed;
}

}  // namespace detail

Rational fitness(const Graph& g, int r3) {
  const int n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "fitness of an empty graph");
  Rational sum = 0;
  for (int v = 0; v < n; ++v) sum += term(g.triangle_degree(v), r3);
  return sum / n;
}

namespace {

struct RestartOutcome {
  bool found = false;
  Rational best_fitness;
  Graph best_graph;
  std::vector<TracePoint> trace;
  long long iterations = 0;
};

RestartOutcome run_restart(const SearchConfig& cfg, int index) {
  Rng rng(cfg.seed + static_cast<uint64_t>(index));
  RestartOutcome out;

  Graph g = random_regular(cfg.n, cfg.r2, rng);
  std::vector<int> tri(cfg.n);
  int off_target = 0;
  for (int v = 0; v < cfg.n; ++v) {
    tri[v] = g.triangle_degree(v);
    if (tri[v] != cfg.r3) ++off_target;
  }
  Rational fit = 0;
  for (int v = 0; v < cfg.n; ++v) fit += term(tri[v], cfg.r3);
  fit /= cfg.n;

  out.best_graph = g;
  out.best_fitness = fit;
  out.trace.push_back({0, fit});
  if (off_target == 0) {
    out.found = true;
    return out;
  }

  auto edges = g.edges();
  int plateau = 0;
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    out.iterations = iter;
    auto pick = pick_two_switch(g, edges, rng);
    if (!pick) break;  // no valid mutation left anywhere

    const int a = pick->a, b = pick->b, c = pick->c, d = pick->d;
    Graph mutated = apply_two_switch(g, a, b, c, d);
    const auto changed = detail::switch_triangle_updates(g, mutated, a, b, c, d, tri);

    Rational delta_fit = 0;
    for (const auto& [v, fresh] : changed) {
      delta_fit += term(fresh, cfg.r3) - term(tri[v], cfg.r3);
    }

    if (delta_fit < 0) continue;  // reject

    g = std::move(mutated);
    for (const auto& [v, fresh] : changed) {
      if ((tri[v] == cfg.r3) != (fresh == cfg.r3)) {
        off_target += fresh == cfg.r3 ? -1 : 1;
      }
      tri[v] = fresh;
    }
    fit += delta_fit / cfg.n;
    edges[pick->e1] = std::minmax(a, c);
    edges[pick->e2] = std::minmax(b, d);

    if (delta_fit > 0) {
      plateau = 0;
      out.best_graph = g;
      out.best_fitness = fit;
      out.trace.push_back({iter, fit});
    } else if (++plateau >= cfg.plateau_limit) {
      break;
    }
    if (off_target == 0) {
      out.found = true;
      break;
    }
  }
  return out;
}

}  // namespace

SearchResult run_search(const SearchConfig& config) {
  config.validate();
  const int restarts = config.restarts;
  std::vector<std::optional<RestartOutcome>> outcomes(restarts);

  const int workers = std::min(thread_cap(), restarts);
  if (workers <= 1) {
    for (int i = 0; i < restarts; ++i) {
      outcomes[i] = run_restart(config, i);
      if (outcomes[i]->found) break;
    }
  } else {
    std::atomic<int> next{0};
    std::atomic<int> found_floor{restarts};
    auto work = [&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= restarts) return;
        if (i > found_floor.load()) continue;  // result can no longer matter
        RestartOutcome out = run_restart(config, i);
        if (out.found) {
          int seen = found_floor.load();
          while (i < seen && !found_floor.compare_exchange_weak(seen, i)) {
          }
        }
        outcomes[i] = std::move(out);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  int winner = -1;
  for (int i = 0; i < restarts; ++i) {
    if (outcomes[i] && outcomes[i]->found) {
      winner = i;
      break;
    }
  }
  if (winner >= 0) {
    result.status = SearchStatus::Found;
  } else {
    result.status = SearchStatus::Exhausted;
    for (int i = 0; i < restarts; ++i) {
      if (!outcomes[i]) continue;
      if (winner < 0 || outcomes[i]->best_fitness > outcomes[winner]->best_fitness) {
        winner = i;
      }
    }
  }

  const RestartOutcome& best = *outcomes[winner];
  result.winning_restart = winner;
  result.best_graph = best.best_graph;
  result.best_fitness = best.best_fitness;
  result.fitness_trace = best.trace;
  const int counted = result.status == SearchStatus::Found ? winner : restarts - 1;
  for (int i = 0; i <= counted; ++i) {
    if (outcomes[i]) result.iterations_used += outcomes[i]->iterations;
  }
  return result;
}

}  // namespace trireg
