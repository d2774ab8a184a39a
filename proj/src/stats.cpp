#include "patternsort/stats.hpp"

#include <algorithm>

#include "patternsort/pattern.hpp"

namespace patternsort {

LtrExtrema ltr_extrema(const Permutation& pi) {
  LtrExtrema out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (out.minima.empty() || pi[i] < out.minima.back().value) out.minima.push_back({i + 1, pi[i]});
    if (out.maxima.empty() || pi[i] > out.maxima.back().value) out.maxima.push_back({i + 1, pi[i]});
  }
  return out;
}

std::size_t count_ltr_minima(const Permutation& pi) {
  std::size_t count = 0;
  int running = static_cast<int>(pi.size()) + 1;
  for (int v : pi) {
    if (v < running) {
      running = v;
      ++count;
    }
  }
  return count;
}

AdjacentPairs descents_ascents(const Permutation& pi) {
  AdjacentPairs out;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    const ValuePair pair{pi[i], pi[i + 1]};
    if (pi[i] > pi[i + 1]) {
      out.descents.push_back(pair);
      if (pi[i + 1] == pi[i] - 1) out.consecutive_descents.push_back(pair);
    } else {
      out.ascents.push_back(pair);
      if (pi[i + 1] == pi[i] + 1) out.consecutive_ascents.push_back(pair);
    }
  }
  return out;
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> v(alpha.begin(), alpha.end());
  const int shift = static_cast<int>(alpha.size());
  for (int b : beta) v.push_back(b + shift);
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> v;
  const int shift = static_cast<int>(beta.size());
  for (int a : alpha) v.push_back(a + shift);
  v.insert(v.end(), beta.begin(), beta.end());
  return Permutation(std::move(v));
}

bool is_layered(const Permutation& pi) {
  // Each maximal decreasing run must occupy exactly the values just above the
  // previous run.
  std::size_t i = 0;
  int covered = 0;
  while (i < pi.size()) {
    std::size_t j = i;
    while (j + 1 < pi.size() && pi[j + 1] < pi[j]) ++j;
    const int run_length = static_cast<int>(j - i + 1);
    if (pi[i] != covered + run_length || pi[j] != covered + 1) return false;
    covered += run_length;
    i = j + 1;
  }
  return true;
}

bool is_layered_by_avoidance(const Permutation& pi) {
  return !contains_classical(pi, Permutation{2, 3, 1}) &&
         !contains_classical(pi, Permutation{3, 1, 2});
}

bool is_colayered(const Permutation& pi) {
  std::size_t i = 0;
  int remaining_top = static_cast<int>(pi.size());
  while (i < pi.size()) {
    std::size_t j = i;
    while (j + 1 < pi.size() && pi[j + 1] == pi[j] + 1) ++j;
    const int run_length = static_cast<int>(j - i + 1);
    if (pi[j] != remaining_top || pi[i] != remaining_top - run_length + 1) return false;
    remaining_top -= run_length;
    i = j + 1;
  }
  return true;
}

}  // namespace patternsort
