#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "trireg/graph.hpp"

namespace trireg {

/// The five catalogued sporadic graphs, shipped as edge-list data files and
/// mirrored as embedded tables (a checksum test pins the two against each
/// other).
enum class NamedId { G1, G2, G3, G4, G5 };

const char* to_string(NamedId id);
NamedId parse_named_id(std::string_view name);  // "G1".."G5", else UnknownGraph
Parameters named_parameters(NamedId id);

Graph complete(int n);       // K_n, parameters (n-1, C(n-1,2))
Graph turan(int n, int r);   // complete r-partite with equal parts; needs r | n
Graph named_graph(NamedId id);
Graph blow_up(const Graph& g);  // G x K2; shifts (r2, r3) to (r2+1, r3)

/// One factor of a product recipe.
struct RecipeAtom {
  enum class Kind { Complete, Turan, Named };

  Kind kind = Kind::Complete;
  int n = 0;            // Complete / Turan
  int r = 0;            // Turan
  NamedId id = NamedId::G1;
  Parameters params;

  static RecipeAtom make_complete(int n);
  static RecipeAtom make_turan(int n, int r);
  static RecipeAtom make_named(NamedId id);

  Graph build() const;
  std::string to_string() const;  // K5 / T8,4 / G2

  // canonical ordering used to keep recipes and tie-breaks deterministic
  std::tuple<int, int, int, int, int> key() const;
  friend bool operator==(const RecipeAtom& a, const RecipeAtom& b) {
    return a.key() == b.key();
  }
  friend bool operator<(const RecipeAtom& a, const RecipeAtom& b) {
    return a.key() < b.key();
  }
};

/// Cartesian-product recipe: a non-empty list of atoms, kept sorted in the
/// canonical atom order. Evaluation left-folds the product, so the vertex
/// indexing (and hence the byte encoding) is reproducible.
struct ConstructionRecipe {
  std::vector<RecipeAtom> atoms;

  Parameters expected_parameters() const;
  std::string to_string() const;  // "K5 x K3"

  friend bool operator==(const ConstructionRecipe&, const ConstructionRecipe&) = default;
};

Graph evaluate(const ConstructionRecipe& recipe);

/// Recipe expression parser for the CLI grammar:
///   atom    := K<n> | T<n>,<r> | G1..G5
///   expr    := term ('x' term)*
///   term    := atom | '(' expr ')'
ConstructionRecipe parse_recipe(std::string_view expr);

/// Smallest recipe realizing (r2, r3) from the curated atom set closed under
/// parameter addition, or nullopt. Ties: fewest atoms, then lexicographically
/// smallest sorted atom list. The atom set is {K_n : n <= 33}, {Turan(n, r) :
/// n <= 34, 2 <= r < n, r | n} and {G1..G5}; the search covers r2 <= max_r2.
std::optional<ConstructionRecipe> construct_for(int r2, int r3, int max_r2 = 32);

/// Reads one of the shipped named-graph files (bare "u v" lines, 0-indexed).
Graph load_named_edge_list(const std::string& path);

}  // namespace trireg
