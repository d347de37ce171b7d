#pragma once

// Independent generate-all-labeled-then-dedup enumeration oracle, feasible up
// to n = 7 (2^21 labeled graphs). Cross-validates the orderly generator.

#include <map>
#include <set>
#include <string>

#include "trireg/enumeration.hpp"
#include "trireg/graph.hpp"

namespace trireg::testing {

/// Isomorphism-class counts of r-regular graphs on n vertices, keyed by r.
inline std::map<int, long long> naive_regular_class_counts(int n) {
  const int pairs = n * (n - 1) / 2;
  std::map<int, std::set<std::string>> classes;

  std::vector<std::pair<int, int>> slot(pairs);
  {
    int t = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slot[t++] = {u, v};
    }
  }

  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
    int degree[8] = {0};
    for (int t = 0; t < pairs; ++t) {
      if ((mask >> t) & 1) {
        ++degree[slot[t].first];
        ++degree[slot[t].second];
      }
    }
    bool regular = true;
    for (int v = 1; v < n; ++v) regular = regular && degree[v] == degree[0];
    if (!regular) continue;

    GraphBuilder b(n);
    for (int t = 0; t < pairs; ++t) {
      if ((mask >> t) & 1) b.add_edge(slot[t].first, slot[t].second);
    }
    classes[degree[0]].insert(canonical_min_key(b.build()));
  }

  std::map<int, long long> counts;
  for (const auto& [r, keys] : classes) counts[r] = static_cast<long long>(keys.size());
  return counts;
}

}  // namespace trireg::testing
