#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patternsort/permutation.hpp"

namespace patternsort {

/// Strictly increasing 1-based positions of an occurrence inside a host.
using Occurrence = std::vector<std::size_t>;

/// Restricts where an occurrence may sit inside the host.
enum class Anchor {
  None,
  First,  ///< first pattern letter must be host position 1
  Last,   ///< last pattern letter must be host position n
};

/// Order-isomorphic subsequence search: some subsequence of `host` has the same
/// standardization as `pattern` (ties included, so it works for words and permutations).
/// Depth-first over index tuples in lexicographic order, hence the witness is the
/// lexicographically least one. An empty pattern occurs at the empty tuple.
std::optional<Occurrence> find_occurrence(std::span<const int> host,
                                          std::span<const int> pattern,
                                          Anchor anchor = Anchor::None);

/// Calls `visit` on every occurrence in lexicographic order until it returns false.
/// Returns false if the visit was cut short.
bool for_each_occurrence(std::span<const int> host, std::span<const int> pattern,
                         const std::function<bool(const Occurrence&)>& visit);

inline bool contains(std::span<const int> host, std::span<const int> pattern,
                     Anchor anchor = Anchor::None) {
  return find_occurrence(host, pattern, anchor).has_value();
}

inline bool contains_classical(const Permutation& host, const Permutation& pattern) {
  return contains(host.values(), pattern.values());
}

inline std::optional<Occurrence> classical_witness(const Permutation& host,
                                                   const Permutation& pattern) {
  return find_occurrence(host.values(), pattern.values());
}

bool avoids_all(const Permutation& host, std::span<const Permutation> patterns);

/// A classical pattern with shaded unit squares; (a, b) is the square whose lower
/// left corner is (a, b) in the plot of tau, 0 <= a, b <= |tau|.
struct MeshPattern {
  Permutation tau;
  std::set<std::pair<int, int>> shaded;

  MeshPattern() = default;
  /// Throws InvalidInput if a shaded square lies outside [0,k]x[0,k].
  MeshPattern(Permutation tau, std::set<std::pair<int, int>> shaded);

  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;
};

/// mu = (132, {(0,2), (2,0), (2,1)}).
const MeshPattern& mu();

bool contains_mesh(const Permutation& host, const MeshPattern& mesh);

/// Direct reading of mu: some 132-occurrence a c b where everything before a is
/// below b or above c, and everything between c and b exceeds b.
bool mu_predicate(const Permutation& host);

/// "132;(0,2)(2,0)(2,1)"; the bare name "mu" is also accepted.
MeshPattern parse_mesh(std::string_view text);
std::string to_string(const MeshPattern& mesh);

}  // namespace patternsort
