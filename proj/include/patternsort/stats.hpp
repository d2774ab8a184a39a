#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "patternsort/permutation.hpp"

namespace patternsort {

struct Extremum {
  std::size_t position;  // 1-based
  int value;
  friend bool operator==(const Extremum&, const Extremum&) = default;
};

struct LtrExtrema {
  std::vector<Extremum> minima;
  std::vector<Extremum> maxima;
};

LtrExtrema ltr_extrema(const Permutation& pi);
std::size_t count_ltr_minima(const Permutation& pi);

using ValuePair = std::pair<int, int>;

/// Adjacent pairs (pi_i, pi_{i+1}) classified as descents/ascents, with the
/// consecutive ones (difference exactly one) listed separately.
struct AdjacentPairs {
  std::vector<ValuePair> descents;
  std::vector<ValuePair> consecutive_descents;
  std::vector<ValuePair> ascents;
  std::vector<ValuePair> consecutive_ascents;
};

AdjacentPairs descents_ascents(const Permutation& pi);

Permutation direct_sum(const Permutation& alpha, const Permutation& beta);
Permutation skew_sum(const Permutation& alpha, const Permutation& beta);

/// Direct sum of decreasing runs, checked structurally.
bool is_layered(const Permutation& pi);
/// Same property through Av(231, 312).
bool is_layered_by_avoidance(const Permutation& pi);
/// Skew sum of increasing runs.
bool is_colayered(const Permutation& pi);

}  // namespace patternsort
