#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trireg/graph.hpp"

namespace trireg {

inline constexpr int kDeskScaleCap = 12;  // default enumeration cap
inline constexpr int kDeskScaleHardCap = 14;

/// Exhaustive-generation job description.
struct EnumSpec {
  int n = 0;
  int r2 = 0;
  bool connected_only = false;
  std::optional<int> filter_r3;
  bool allow_large = false;  // lifts the cap from 12 to the hard cap 14

  void validate() const;
};

/// Streams exactly one representative per isomorphism class of simple
/// r2-regular graphs on n vertices, in a deterministic order, relabeled to
/// the canonical form below. The callback returns false to stop early.
/// Generation is orderly: edge-augmentation over degree-feasible partial
/// graphs with canonical-minimum rejection.
void enumerate_regular(const EnumSpec& spec,
                       const std::function<bool(const Graph&)>& emit);

std::vector<Graph> enumerate_regular(const EnumSpec& spec);

/// All isomorphism classes on exactly n vertices whose regularity parameters
/// equal (r2, r3).
std::vector<Graph> find_with_parameters(int n, int r2, int r3,
                                        bool connected_only);

struct TuranUniquenessReport {
  bool unique = false;
  std::optional<Graph> offender;  // extra class, or the sole class when wrong
};

/// Desk-scale corroboration that Turan(2m+2, m+1) is the only connected graph
/// with parameters (2m, 4 C(m,2)) across all n <= n_max. Consistency at the
/// cap, not a proof.
TuranUniquenessReport verify_turan_uniqueness(int m, int n_max,
                                              bool allow_large = false);

/// Row-major upper-triangle bit string, minimized over all relabelings; the
/// dedup key everywhere. First byte is the vertex count.
std::string canonical_min_key(const Graph& g);

/// The graph relabeled by a permutation achieving canonical_min_key.
Graph canonical_form(const Graph& g);

}  // namespace trireg
