#include <cstdlib>
#include <map>

#include "doctest.h"
#include "support/oracles.hpp"
#include "trireg/constructions.hpp"
#include "trireg/search.hpp"

using namespace trireg;
using namespace trireg::testing;

TEST_CASE("random regular generation") {
  Rng rng(1);
  CHECK(are_isomorphic(random_regular(4, 3, rng), complete(4)));

  Rng rng2(2);
  CHECK_THROWS_AS((void)random_regular(5, 3, rng2), Error);  // odd stub count
  CHECK_THROWS_AS((void)random_regular(4, 4, rng2), Error);  // r2 >= n

  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    const Graph g = random_regular(6, 2, r);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
  }
  // validation across a spread of (n, r2)
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng r(seed * 31 + 7);
    for (auto [n, r2] : {std::pair{8, 3}, {9, 4}, {12, 5}, {8, 5}}) {
      const Graph g = random_regular(n, r2, r);
      for (int v = 0; v < n; ++v) CHECK(g.degree(v) == r2);
    }
  }
}

TEST_CASE("two-switch") {
  // the C4 example: remove 01, 23; add 02, 13
  const Graph c4 = cycle(4);
  const Graph switched = apply_two_switch(c4, 0, 1, 2, 3);
  CHECK(switched.has_edge(0, 2));
  CHECK(switched.has_edge(1, 3));
  CHECK(switched.has_edge(1, 2));
  CHECK(switched.has_edge(0, 3));
  CHECK_FALSE(switched.has_edge(0, 1));
  for (int v = 0; v < 4; ++v) CHECK(switched.degree(v) == 2);

  Rng rng(3);
  CHECK_FALSE(two_switch(complete(4), rng).has_value());

  // degree sequence preservation and simplicity on random regular graphs
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Rng r(seed);
    Graph g = random_regular(10, 3, r);
    for (int step = 0; step < 10; ++step) {
      auto next = two_switch(g, r);
      REQUIRE(next.has_value());
      for (int v = 0; v < 10; ++v) CHECK(next->degree(v) == 3);
      g = *next;
    }
  }

  CHECK_THROWS_AS((void)apply_two_switch(c4, 0, 1, 1, 2), Error);
  CHECK_THROWS_AS((void)apply_two_switch(c4, 0, 2, 1, 3), Error);  // not edges
}

TEST_CASE("fitness formula") {
  CHECK(fitness(turan(6, 3), 4) == Rational(1));
  CHECK(fitness(cycle(5), 1) == Rational(1, 4));
  CHECK(fitness(complete(4), 2) == Rational(1, 4));
  CHECK_THROWS_AS((void)fitness(Graph(), 0), Error);

  // equals 1 exactly on target graphs, below 1 otherwise
  Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    const Graph g = random_regular(8, 4, rng);
    const auto params = g.regularity_parameters();
    for (int r3 = 0; r3 <= 4; ++r3) {
      const bool on_target = params && params->r3 == r3;
      CHECK((fitness(g, r3) == Rational(1)) == on_target);
      CHECK(fitness(g, r3) > Rational(0));
      CHECK(fitness(g, r3) <= Rational(1));
    }
  }
}

TEST_CASE("incremental triangle updates match full recomputation") {
  Rng rng(9);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_regular(11 - round % 3, 4, rng);
    const int n = g.vertex_count();
    std::vector<int> tri(n);
    for (int v = 0; v < n; ++v) tri[v] = g.triangle_degree(v);

    for (int step = 0; step < 8; ++step) {
      auto next = two_switch(g, rng);
      if (!next) break;
      // recover the switch endpoints by diffing edge sets
      std::vector<std::pair<int, int>> removed, added;
      for (const auto& e : g.edges()) {
        if (!next->has_edge(e.first, e.second)) removed.push_back(e);
      }
      for (const auto& e : next->edges()) {
        if (!g.has_edge(e.first, e.second)) added.push_back(e);
      }
      REQUIRE(removed.size() == 2);
      REQUIRE(added.size() == 2);
      int a = removed[0].first, b = removed[0].second;
      int c = removed[1].first, d = removed[1].second;
      auto was_added = [&](int u, int v) {
        const auto e = std::minmax(u, v);
        return std::pair<int, int>(e.first, e.second) == added[0] ||
               std::pair<int, int>(e.first, e.second) == added[1];
      };
      if (!(was_added(a, c) && was_added(b, d))) std::swap(c, d);
      REQUIRE(was_added(a, c));
      REQUIRE(was_added(b, d));

      auto updates = detail::switch_triangle_updates(g, *next, a, b, c, d, tri);
      for (const auto& [v, fresh] : updates) tri[v] = fresh;
      for (int v = 0; v < n; ++v) CHECK(tri[v] == next->triangle_degree(v));
      g = *next;
    }
  }
}

TEST_CASE("run_search basics") {
  SearchConfig k4;
  k4.r2 = 3;
  k4.r3 = 3;
  k4.n = 4;
  k4.seed = 0;
  const SearchResult res = run_search(k4);
  CHECK(res.status == SearchStatus::Found);
  CHECK(res.best_fitness == Rational(1));
  CHECK(are_isomorphic(res.best_graph, complete(4)));
  CHECK(*res.best_graph.regularity_parameters() == Parameters{3, 3});

  SearchConfig octa;
  octa.r2 = 4;
  octa.r3 = 4;
  octa.n = 6;
  octa.seed = 1;
  const SearchResult octa_res = run_search(octa);
  CHECK(octa_res.status == SearchStatus::Found);
  CHECK(are_isomorphic(octa_res.best_graph, turan(6, 3)));

  SearchConfig bad;
  bad.r2 = 3;
  bad.r3 = 0;
  bad.n = 3;
  CHECK_THROWS_AS((void)run_search(bad), Error);  // r2 >= n
  bad.n = 5;
  CHECK_THROWS_AS((void)run_search(bad), Error);  // parity
  bad.n = 6;
  bad.restarts = 0;
  CHECK_THROWS_AS((void)run_search(bad), std::invalid_argument);
}

TEST_CASE("forbidden target exhausts with fitness below 1") {
  SearchConfig cfg;
  cfg.r2 = 4;
  cfg.r3 = 5;  // (4,5) is a forbidden pair
  cfg.n = 12;
  cfg.seed = 2;
  cfg.max_iterations = 2000;
  cfg.restarts = 3;
  cfg.plateau_limit = 200;
  const SearchResult res = run_search(cfg);
  CHECK(res.status == SearchStatus::Exhausted);
  CHECK(res.best_fitness < Rational(1));
  CHECK(res.best_fitness == fitness(res.best_graph, cfg.r3));
}

TEST_CASE("search determinism and trace monotonicity") {
  SearchConfig cfg;
  cfg.r2 = 4;
  cfg.r3 = 2;
  cfg.n = 9;
  cfg.seed = 11;
  cfg.max_iterations = 4000;
  cfg.restarts = 6;
  cfg.plateau_limit = 400;

  const SearchResult a = run_search(cfg);
  const SearchResult b = run_search(cfg);
  CHECK(a.status == b.status);
  CHECK(a.best_graph == b.best_graph);
  CHECK(a.best_fitness == b.best_fitness);
  CHECK(a.iterations_used == b.iterations_used);
  CHECK(a.winning_restart == b.winning_restart);
  REQUIRE(a.fitness_trace.size() == b.fitness_trace.size());
  for (size_t i = 0; i < a.fitness_trace.size(); ++i) {
    CHECK(a.fitness_trace[i].iteration == b.fitness_trace[i].iteration);
    CHECK(a.fitness_trace[i].fitness == b.fitness_trace[i].fitness);
  }

  for (size_t i = 1; i < a.fitness_trace.size(); ++i) {
    CHECK(a.fitness_trace[i].fitness > a.fitness_trace[i - 1].fitness);
    CHECK(a.fitness_trace[i].iteration > a.fitness_trace[i - 1].iteration);
  }
  CHECK(a.fitness_trace.back().fitness == a.best_fitness);
  CHECK(a.best_fitness == fitness(a.best_graph, cfg.r3));
}

TEST_CASE("worker count does not change the result") {
  SearchConfig cfg;
  cfg.r2 = 4;
  cfg.r3 = 4;
  cfg.n = 8;
  cfg.seed = 4;
  cfg.max_iterations = 3000;
  cfg.restarts = 8;
  cfg.plateau_limit = 300;

  setenv("TRIREG_THREADS", "1", 1);
  const SearchResult serial = run_search(cfg);
  setenv("TRIREG_THREADS", "4", 1);
  const SearchResult parallel = run_search(cfg);
  unsetenv("TRIREG_THREADS");

  CHECK(serial.status == parallel.status);
  CHECK(serial.best_graph == parallel.best_graph);
  CHECK(serial.best_fitness == parallel.best_fitness);
  CHECK(serial.iterations_used == parallel.iterations_used);
  CHECK(serial.winning_restart == parallel.winning_restart);
}
