#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trireg/constructions.hpp"
#include "trireg/graph.hpp"

namespace trireg {

enum class ForbidRule {
  UpperBound,         // r3 > C(r2, 2)
  TheoremDownGap,     // r3 = C(r2, 2) - c, 1 <= c, 2c <= r2 - 1, r2 >= 3
  PropositionMidGap,  // r3 = C(r2-1, 2) + c, c >= 1, 2c < r2 - 2, r2 > 4
  EdgeHandshake,      // no edge-degree multiset sums to 2 r3
  CuratedExhaustive,  // excluded by exhaustive case analysis (curated list)
};

const char* to_string(ForbidRule rule);

/// Classification of a parameter pair.
struct Verdict {
  enum class Kind { Forbidden, Exists, Unknown };

  Kind kind = Kind::Unknown;
  std::optional<ForbidRule> rule;             // set when Forbidden
  std::optional<ConstructionRecipe> witness;  // set when Exists

  static Verdict forbidden(ForbidRule r) { return {Kind::Forbidden, r, {}}; }
  static Verdict exists(ConstructionRecipe w) { return {Kind::Exists, {}, std::move(w)}; }
  static Verdict unknown() { return {}; }
};

/// Cells pinned by hand analysis rather than formulas. The shipped
/// data/curated.json is the versioned source; defaults() embeds the same
/// values (a test pins file == defaults).
struct CuratedCells {
  std::vector<Parameters> exhaustive_forbidden;  // {(7,14)}
  std::vector<Parameters> unknown;               // {(8,17), (9,23)}

  static const CuratedCells& defaults();
  static CuratedCells load(const std::string& path);
};

/// First closed-form rule excluding (r2, r3), if any. Interval endpoints are
/// evaluated in exact integer arithmetic.
std::optional<ForbidRule> closed_form_forbidden(int r2, int r3);

/// All k in [0, min(r3, r2-1)] with 2 r3 <= (r2-k-1)(r2-2) + k(k+1): the only
/// edge triangle degrees any (r2, r3) graph can carry.
std::vector<int> edge_degree_feasible_set(int r2, int r3);

/// Whether some multiset of exactly r2 values from the feasible set sums to
/// 2 r3. False implies no graph with these parameters exists.
bool edge_handshake_feasible(int r2, int r3);

/// All non-negative coefficient vectors solving sum(c_i * atom_i) = (r2, r3)
/// componentwise. Empty certifies Cartesian indecomposability over the atoms.
/// Atoms with r2 = 0 never enter a solution with a positive coefficient.
std::vector<std::vector<int>> atom_sum_decomposition(
    int r2, int r3, std::span<const Parameters> atoms);

/// Forbidden (first matching rule), Exists (with recipe), or Unknown.
Verdict classify(int r2, int r3);

/// The smallest r2 in [1, max_r2] with classify(r2, r3) = Exists. An upper
/// bound on the true threshold; degree-0 graphs are ignored as degenerate.
std::optional<int> known_threshold(int r3, int max_r2);

/// classify() applied cellwise over r2 in [2, max_r2], r3 in [1, max_r3],
/// mirroring the admissibility table layout. A cell whose witness equals the
/// left cell's witness times K2 is flagged as a blow-up arrow.
struct AdmissibilityTable {
  struct Cell {
    Verdict verdict;
    bool blow_up_arrow = false;
  };

  int max_r2 = 0;
  int max_r3 = 0;
  std::vector<Cell> cells;  // ordered by (r3, r2)

  const Cell& cell(int r2, int r3) const {
    return cells[static_cast<size_t>(r3 - 1) * (max_r2 - 1) + (r2 - 2)];
  }
};

AdmissibilityTable admissibility_table(int max_r2, int max_r3);

/// Cells with r2 <= max_r2 where the handshake rule fires although no
/// closed-form rule does. Diagnostic: whether this ever happens is open, so
/// such cells are reported rather than assumed away.
std::vector<Parameters> edge_handshake_only_cells(int max_r2);

}  // namespace trireg
