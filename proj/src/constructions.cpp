#include "trireg/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

namespace trireg {

namespace {

// Edge lists for G1..G5, transcribed from the shipped data files
// (data/named/*.txt). G1 is the icosahedron with the usual labelling:
// apex 0, upper ring 1..5, lower ring 6..10, apex 11.
constexpr std::array<std::pair<int, int>, 30> kG1Edges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
    {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
    {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
    {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
}};

constexpr std::array<std::pair<int, int>, 54> kG2Edges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 13}, {0, 14}, {0, 16},
    {1, 2}, {1, 3}, {1, 14}, {1, 15}, {1, 16},
    {2, 3}, {2, 4}, {2, 5}, {2, 7},
    {3, 4}, {3, 5}, {3, 6},
    {4, 5}, {4, 6}, {4, 7}, {4, 11},
    {5, 6}, {5, 7}, {5, 14},
    {6, 7}, {6, 8}, {6, 9},
    {7, 8}, {7, 9},
    {8, 9}, {8, 10}, {8, 11}, {8, 17},
    {9, 11}, {9, 12}, {9, 17},
    {10, 11}, {10, 12}, {10, 13}, {10, 15}, {10, 17},
    {11, 12}, {11, 17},
    {12, 13}, {12, 15}, {12, 17},
    {13, 14}, {13, 15}, {13, 16},
    {14, 15}, {14, 16},
    {15, 16},
    {16, 17},
}};

constexpr std::array<std::pair<int, int>, 30> kG3Edges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 7}, {0, 8},
    {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 8},
    {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 9},
    {3, 4}, {3, 5}, {3, 9},
    {4, 6}, {4, 9},
    {5, 6}, {5, 7}, {5, 8}, {5, 9},
    {6, 7}, {6, 8}, {6, 9},
    {7, 8},
    {8, 9},
}};

constexpr std::array<std::pair<int, int>, 42> kG4Edges{{
    {0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 11},
    {1, 2}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {1, 8},
    {2, 3}, {2, 4}, {2, 7}, {2, 8}, {2, 9},
    {3, 4}, {3, 5}, {3, 8}, {3, 9}, {3, 10},
    {4, 5}, {4, 9}, {4, 10}, {4, 11},
    {5, 6}, {5, 10}, {5, 11},
    {6, 7}, {6, 8}, {6, 10}, {6, 11},
    {7, 8}, {7, 9}, {7, 11},
    {8, 9}, {8, 10},
    {9, 10}, {9, 11},
    {10, 11},
}};

constexpr std::array<std::pair<int, int>, 60> kG5Edges{{
    {0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 12}, {0, 14},
    {1, 2}, {1, 5}, {1, 8}, {1, 9}, {1, 12}, {1, 13}, {1, 14},
    {2, 5}, {2, 6}, {2, 10}, {2, 11}, {2, 12}, {2, 13},
    {3, 4}, {3, 7}, {3, 9}, {3, 10}, {3, 11}, {3, 12}, {3, 13}, {3, 14},
    {4, 5}, {4, 6}, {4, 8}, {4, 10}, {4, 12}, {4, 14},
    {5, 8}, {5, 9}, {5, 10}, {5, 11},
    {6, 7}, {6, 9}, {6, 11}, {6, 13}, {6, 14},
    {7, 9}, {7, 10}, {7, 11}, {7, 12}, {7, 13},
    {8, 9}, {8, 10}, {8, 11}, {8, 12}, {8, 14},
    {9, 11}, {9, 14},
    {10, 12}, {10, 13},
    {11, 13},
    {13, 14},
}};

struct NamedEntry {
  const char* name;
  int n;
  Parameters params;
  std::span<const std::pair<int, int>> edges;
};

const std::array<NamedEntry, 5>& named_table() {
  static const std::array<NamedEntry, 5> table{{
      {"G1", 12, {5, 5}, kG1Edges},
      {"G2", 18, {6, 8}, kG2Edges},
      {"G3", 10, {6, 9}, kG3Edges},
      {"G4", 12, {7, 13}, kG4Edges},
      {"G5", 15, {8, 14}, kG5Edges},
  }};
  return table;
}

int binom2(int k) { return k * (k - 1) / 2; }

}  // namespace

const char* to_string(NamedId id) { return named_table()[static_cast<int>(id)].name; }

NamedId parse_named_id(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (name == named_table()[i].name) return static_cast<NamedId>(i);
  }
  throw Error(ErrorCode::UnknownGraph,
              "unknown named graph \"" + std::string(name) + "\"");
}

Parameters named_parameters(NamedId id) {
  return named_table()[static_cast<int>(id)].params;
}

Graph complete(int n) {
  if (n < 1) throw Error(ErrorCode::EmptyGraph, "complete graph needs n >= 1");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph turan(int n, int r) {
  if (r < 1 || n < 1 || n % r != 0) {
    throw Error(ErrorCode::IndivisibleParts,
                "Turan(" + std::to_string(n) + ", " + std::to_string(r) +
                    ") needs 1 <= r | n");
  }
  const int part = n / r;
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / part != v / part) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph named_graph(NamedId id) {
  const NamedEntry& e = named_table()[static_cast<int>(id)];
  return Graph::from_edge_list(e.n, e.edges);
}

Graph blow_up(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::EmptyFactor, "blow-up of an empty graph");
  }
  return g.cartesian_product(complete(2));
}

// ---------------------------------------------------------------------------
// Recipes

RecipeAtom RecipeAtom::make_complete(int n) {
  if (n < 1) throw Error(ErrorCode::EmptyGraph, "complete atom needs n >= 1");
  RecipeAtom a;
  a.kind = Kind::Complete;
  a.n = n;
  a.params = {n - 1, binom2(n - 1)};
  return a;
}

RecipeAtom RecipeAtom::make_turan(int n, int r) {
  if (r < 1 || n < 1 || n % r != 0) {
    throw Error(ErrorCode::IndivisibleParts,
                "Turan atom needs 1 <= r | n");
  }
  RecipeAtom a;
  a.kind = Kind::Turan;
  a.n = n;
  a.r = r;
  const int part = n / r;
  if (r >= 3) {
    a.params = {part * (r - 1), binom2(r - 1) * part * part};
  } else {
    // r < 3 falls outside the closed-form range; read the parameters off the
    // graph itself (empty graph for r = 1, K_{m,m} for r = 2).
    a.params = *turan(n, r).regularity_parameters();
  }
  return a;
}

RecipeAtom RecipeAtom::make_named(NamedId id) {
  RecipeAtom a;
  a.kind = Kind::Named;
  a.id = id;
  a.params = named_parameters(id);
  return a;
}

Graph RecipeAtom::build() const {
  switch (kind) {
    case Kind::Complete: return complete(n);
    case Kind::Turan: return turan(n, r);
    case Kind::Named: return named_graph(id);
  }
  throw Error(ErrorCode::InvalidRecipe, "corrupt recipe atom");
}

std::string RecipeAtom::to_string() const {
  switch (kind) {
    case Kind::Complete: return "K" + std::to_string(n);
    case Kind::Turan: return "T" + std::to_string(n) + "," + std::to_string(r);
    case Kind::Named: return trireg::to_string(id);
  }
  return "?";
}

std::tuple<int, int, int, int, int> RecipeAtom::key() const {
  const int kind_rank = static_cast<int>(kind);
  const int a = kind == Kind::Named ? static_cast<int>(id) : n;
  return {params.r2, params.r3, kind_rank, a, r};
}

Parameters ConstructionRecipe::expected_parameters() const {
  Parameters sum{0, 0};
  for (const auto& atom : atoms) {
    sum.r2 += atom.params.r2;
    sum.r3 += atom.params.r3;
  }
  return sum;
}

std::string ConstructionRecipe::to_string() const {
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " x ";
    out += atoms[i].to_string();
  }
  return out;
}

Graph evaluate(const ConstructionRecipe& recipe) {
  if (recipe.atoms.empty()) {
    throw Error(ErrorCode::InvalidRecipe, "recipe has no atoms");
  }
  Graph g = recipe.atoms[0].build();
  for (size_t i = 1; i < recipe.atoms.size(); ++i) {
    g = g.cartesian_product(recipe.atoms[i].build());
  }
  return g;
}

// ---------------------------------------------------------------------------
// Recipe parsing (CLI grammar)

namespace {

struct RecipeParser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::InvalidRecipe,
                why + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    int value = 0;
    for (size_t i = start; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > kMaxVertices) fail("number too large");
    }
    return value;
  }

  RecipeAtom atom() {
    char c = peek();
    if (c == 'K') {
      ++pos;
      return RecipeAtom::make_complete(number());
    }
    if (c == 'T') {
      ++pos;
      int n = number();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',') fail("expected ',' in Turan atom");
      ++pos;
      return RecipeAtom::make_turan(n, number());
    }
    if (c == 'G') {
      ++pos;
      int i = number();
      if (i < 1 || i > 5) fail("named graphs are G1..G5");
      return RecipeAtom::make_named(static_cast<NamedId>(i - 1));
    }
    fail("expected K<n>, T<n>,<r> or G1..G5");
  }

  // term := atom | '(' expr ')'
  std::vector<RecipeAtom> term() {
    if (peek() == '(') {
      ++pos;
      auto atoms = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return atoms;
    }
    return {atom()};
  }

  // expr := term ('x' term)*
  std::vector<RecipeAtom> expr() {
    auto atoms = term();
    while (peek() == 'x') {
      ++pos;
      auto more = term();
      atoms.insert(atoms.end(), more.begin(), more.end());
    }
    return atoms;
  }
};

}  // namespace

ConstructionRecipe parse_recipe(std::string_view expr) {
  RecipeParser p{expr};
  ConstructionRecipe recipe{p.expr()};
  if (!p.eof()) p.fail("trailing input");
  std::sort(recipe.atoms.begin(), recipe.atoms.end());
  return recipe;
}

// ---------------------------------------------------------------------------
// construct_for: shortest-recipe table over the curated atom set.
//
// dp[(r2, r3)] holds the best sorted atom-index multiset realizing the pair,
// ordered by (atom count, lexicographic index sequence). Atoms all have
// r2 >= 1, so filling states in increasing r2 is a valid evaluation order.

namespace {

struct RecipeTable {
  int max_r2 = 0;
  int max_r3 = 0;
  std::vector<RecipeAtom> atoms;
  std::vector<std::vector<uint16_t>> best;
  std::vector<char> reachable;

  size_t idx(int r2, int r3) const {
    return static_cast<size_t>(r2) * (max_r3 + 1) + r3;
  }

  explicit RecipeTable(int bound) : max_r2(bound), max_r3(binom2(bound)) {
    for (int n = 2; n <= bound + 1; ++n) atoms.push_back(RecipeAtom::make_complete(n));
    // r = n duplicates K_n; r <= 2 gives triangle-free graphs, which the
    // (r2, 0) special case below covers with K_{r2,r2} directly.
    for (int n = 6; n <= bound + 2; ++n) {
      for (int r = 3; r < n; ++r) {
        if (n % r != 0) continue;
        auto a = RecipeAtom::make_turan(n, r);
        if (a.params.r2 >= 1 && a.params.r2 <= bound) atoms.push_back(a);
      }
    }
    for (int i = 0; i < 5; ++i) {
      auto a = RecipeAtom::make_named(static_cast<NamedId>(i));
      if (a.params.r2 <= bound) atoms.push_back(a);
    }
    std::erase_if(atoms, [&](const RecipeAtom& a) {
      return a.params.r2 < 1 || a.params.r2 > bound || a.params.r3 > max_r3;
    });
    std::sort(atoms.begin(), atoms.end());

    best.assign(static_cast<size_t>(max_r2 + 1) * (max_r3 + 1), {});
    reachable.assign(best.size(), 0);
    reachable[idx(0, 0)] = 1;

    for (int r2 = 1; r2 <= max_r2; ++r2) {
      for (int r3 = 0; r3 <= max_r3; ++r3) {
        bool found = false;
        std::vector<uint16_t> winner;
        for (uint16_t ai = 0; ai < atoms.size(); ++ai) {
          const Parameters& p = atoms[ai].params;
          if (p.r2 > r2 || p.r3 > r3) continue;
          size_t from = idx(r2 - p.r2, r3 - p.r3);
          if (!reachable[from]) continue;
          std::vector<uint16_t> cand = best[from];
          cand.insert(std::upper_bound(cand.begin(), cand.end(), ai), ai);
          if (!found || cand.size() < winner.size() ||
              (cand.size() == winner.size() && cand < winner)) {
            winner = std::move(cand);
            found = true;
          }
        }
        if (found) {
          best[idx(r2, r3)] = std::move(winner);
          reachable[idx(r2, r3)] = 1;
        }
      }
    }
  }

  std::optional<ConstructionRecipe> find(int r2, int r3) const {
    if (r2 < 0 || r3 < 0 || r2 > max_r2 || r3 > max_r3) return std::nullopt;
    if (r3 == 0) {
      // triangle-free witnesses: K1, K2, then the complete bipartite K_{m,m}
      if (r2 == 0) return ConstructionRecipe{{RecipeAtom::make_complete(1)}};
      if (r2 == 1) return ConstructionRecipe{{RecipeAtom::make_complete(2)}};
      return ConstructionRecipe{{RecipeAtom::make_turan(2 * r2, 2)}};
    }
    if (!reachable[idx(r2, r3)]) return std::nullopt;
    ConstructionRecipe recipe;
    for (uint16_t ai : best[idx(r2, r3)]) recipe.atoms.push_back(atoms[ai]);
    return recipe;
  }
};

}  // namespace

std::optional<ConstructionRecipe> construct_for(int r2, int r3, int max_r2) {
  if (r2 < 0 || r3 < 0) return std::nullopt;
  if (max_r2 == 32) {
    static const RecipeTable table(32);
    return table.find(r2, r3);
  }
  RecipeTable table(max_r2);
  return table.find(r2, r3);
}

Graph load_named_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path);
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  int u = 0, v = 0;
  while (in >> u >> v) {
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (!in.eof()) throw Error(ErrorCode::FormatError, "malformed pair line in " + path);
  return Graph::from_edge_list(max_vertex + 1, edges);
}

}  // namespace trireg
