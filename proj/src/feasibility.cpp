#include "trireg/feasibility.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace trireg {

namespace {

long long binom2(long long k) { return k * (k - 1) / 2; }

bool contains(const std::vector<Parameters>& cells, int r2, int r3) {
  return std::find(cells.begin(), cells.end(), Parameters{r2, r3}) != cells.end();
}

}  // namespace

const char* to_string(ForbidRule rule) {
  switch (rule) {
    case ForbidRule::UpperBound: return "UpperBound";
    case ForbidRule::TheoremDownGap: return "TheoremDownGap";
    case ForbidRule::PropositionMidGap: return "PropositionMidGap";
    case ForbidRule::EdgeHandshake: return "EdgeHandshake";
    case ForbidRule::CuratedExhaustive: return "CuratedExhaustive";
  }
  return "?";
}

const CuratedCells& CuratedCells::defaults() {
  static const CuratedCells cells{
      {{7, 14}},
      {{8, 17}, {9, 23}},
  };
  return cells;
}

CuratedCells CuratedCells::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
    CuratedCells cells;
    for (const auto& cell : doc.at("exhaustive_forbidden")) {
      cells.exhaustive_forbidden.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
    }
    for (const auto& cell : doc.at("unknown")) {
      cells.unknown.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
    }
    return cells;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::FormatError, path + ": " + e.what());
  }
}

std::optional<ForbidRule> closed_form_forbidden(int r2, int r3) {
  if (r2 < 0 || r3 < 0) return std::nullopt;
  if (r3 > binom2(r2)) return ForbidRule::UpperBound;
  if (r2 >= 3) {
    // r3 = C(r2,2) - c with 1 <= c <= (r2-1)/2, endpoints kept exact: 2c <= r2-1
    const long long c = binom2(r2) - r3;
    if (c >= 1 && 2 * c <= r2 - 1) return ForbidRule::TheoremDownGap;
  }
  if (r2 > 4) {
    // r3 = C(r2-1,2) + c with 0 < c < (r2-2)/2, exact form: 2c < r2-2
    const long long c = r3 - binom2(r2 - 1);
    if (c >= 1 && 2 * c < r2 - 2) return ForbidRule::PropositionMidGap;
  }
  return std::nullopt;
}

std::vector<int> edge_degree_feasible_set(int r2, int r3) {
  std::vector<int> out;
  const long long hi = std::min<long long>(r3, r2 - 1);
  for (long long k = 0; k <= hi; ++k) {
    if (2LL * r3 <= (r2 - k - 1) * (r2 - 2) + k * (k + 1)) {
      out.push_back(static_cast<int>(k));
    }
  }
  return out;
}

bool edge_handshake_feasible(int r2, int r3) {
  const auto set = edge_degree_feasible_set(r2, r3);
  if (set.empty()) return false;
  const long long target = 2LL * r3;
  // achievable sums of exactly r2 values from the set
  std::vector<char> can(target + 1, 0);
  can[0] = 1;
  for (int step = 0; step < r2; ++step) {
    std::vector<char> next(target + 1, 0);
    for (long long s = 0; s <= target; ++s) {
      if (!can[s]) continue;
      for (int k : set) {
        if (s + k <= target) next[s + k] = 1;
      }
    }
    can = std::move(next);
  }
  return can[target] != 0;
}

std::vector<std::vector<int>> atom_sum_decomposition(
    int r2, int r3, std::span<const Parameters> atoms) {
  std::vector<std::vector<int>> solutions;
  std::vector<int> coeff(atoms.size(), 0);

  auto recurse = [&](auto&& self, size_t i, int rem2, int rem3) -> void {
    if (i == atoms.size()) {
      if (rem2 == 0 && rem3 == 0) solutions.push_back(coeff);
      return;
    }
    const Parameters& a = atoms[i];
    int max_count = 0;
    if (a.r2 > 0) max_count = rem2 / a.r2;
    if (a.r3 > 0) max_count = std::min(max_count, rem3 / a.r3);
    for (int c = 0; c <= max_count; ++c) {
      coeff[i] = c;
      self(self, i + 1, rem2 - c * a.r2, rem3 - c * a.r3);
    }
    coeff[i] = 0;
  };
  recurse(recurse, 0, r2, r3);
  return solutions;
}

Verdict classify(int r2, int r3) {
  if (auto rule = closed_form_forbidden(r2, r3)) return Verdict::forbidden(*rule);
  if (r2 >= 1 && !edge_handshake_feasible(r2, r3)) {
    return Verdict::forbidden(ForbidRule::EdgeHandshake);
  }
  if (contains(CuratedCells::defaults().exhaustive_forbidden, r2, r3)) {
    return Verdict::forbidden(ForbidRule::CuratedExhaustive);
  }
  if (auto recipe = construct_for(r2, r3)) return Verdict::exists(std::move(*recipe));
  return Verdict::unknown();
}

std::optional<int> known_threshold(int r3, int max_r2) {
  for (int r2 = 1; r2 <= max_r2; ++r2) {
    if (classify(r2, r3).kind == Verdict::Kind::Exists) return r2;
  }
  return std::nullopt;
}

AdmissibilityTable admissibility_table(int max_r2, int max_r3) {
  if (max_r2 < 2 || max_r3 < 1) {
    throw Error(ErrorCode::InvalidRecipe, "table bounds must be >= (2, 1)");
  }
  AdmissibilityTable table;
  table.max_r2 = max_r2;
  table.max_r3 = max_r3;
  table.cells.resize(static_cast<size_t>(max_r3) * (max_r2 - 1));

  const RecipeAtom k2 = RecipeAtom::make_complete(2);
  for (int r3 = 1; r3 <= max_r3; ++r3) {
    for (int r2 = 2; r2 <= max_r2; ++r2) {
      AdmissibilityTable::Cell cell;
      cell.verdict = classify(r2, r3);
      if (cell.verdict.kind == Verdict::Kind::Exists && r2 > 2) {
        const auto& left = table.cell(r2 - 1, r3);
        if (left.verdict.kind == Verdict::Kind::Exists) {
          ConstructionRecipe blown = *left.verdict.witness;
          blown.atoms.insert(
              std::upper_bound(blown.atoms.begin(), blown.atoms.end(), k2), k2);
          cell.blow_up_arrow = blown == *cell.verdict.witness;
        }
      }
      table.cells[static_cast<size_t>(r3 - 1) * (max_r2 - 1) + (r2 - 2)] =
          std::move(cell);
    }
  }
  return table;
}

std::vector<Parameters> edge_handshake_only_cells(int max_r2) {
  std::vector<Parameters> out;
  for (int r2 = 1; r2 <= max_r2; ++r2) {
    for (int r3 = 0; r3 <= binom2(r2); ++r3) {
      if (closed_form_forbidden(r2, r3).has_value()) continue;
      if (!edge_handshake_feasible(r2, r3)) out.push_back({r2, r3});
    }
  }
  return out;
}

}  // namespace trireg
