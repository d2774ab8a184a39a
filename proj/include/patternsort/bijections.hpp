#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "patternsort/paths.hpp"
#include "patternsort/permutation.hpp"
#include "patternsort/rgf.hpp"

namespace patternsort {

// ---- phi: Sort(132) -> R(12231) ----

enum class PhiMode {
  Strict,   ///< input must be 132-sortable
  Relaxed,  ///< any permutation; no avoidance property is claimed for the result
};

/// r_i = j where m_j <= pi_i < m_{j-1}, the strip index of each entry.
/// Strict mode throws InvalidInput on an unsortable permutation.
Rgf phi(const Permutation& pi, PhiMode mode = PhiMode::Strict);

/// Rebuilds pi letter by letter: a first occurrence inserts a new minimum, any other
/// letter r inserts into cell C_{r,k} by whichever of min/cons is legal.
/// Throws InvalidInput if R contains 12231.
Permutation phi_inverse(const Rgf& r);

// ---- psi: R(1221) -> Dyck paths ----

/// Replays the generating-tree history of R: each appended letter j at active site j
/// becomes a peak insertion in the final descent of the current path.
/// Throws InvalidInput if R contains 1221.
DyckPath psi(const Rgf& r);
Rgf psi_inverse(const DyckPath& path);

// ---- beta: labeled Motzkin paths -> RGFs ----

enum class ContainerMode { Stack, Queue };

/// The auxiliary container of beta: a stack or a queue over letters.
class BetaContainer {
 public:
  explicit BetaContainer(ContainerMode mode) : mode_(mode) {}

  ContainerMode mode() const noexcept { return mode_; }
  bool empty() const noexcept { return content_.empty(); }
  std::size_t size() const noexcept { return content_.size(); }
  void push(int letter) { content_.push_back(letter); }
  /// Most recent letter for a stack, oldest for a queue. Throws MalformedInput if empty.
  int accessible() const;
  /// Removes and returns the accessible letter. Throws MalformedInput if empty.
  int take();

 private:
  ContainerMode mode_;
  std::deque<int> content_;
};

/// Starting from "1", each step appends one letter. Stack mode lands in R(12323),
/// queue mode in R(12332); the result has length |path| + 1.
Rgf beta(const LabeledMotzkinPath& path, ContainerMode mode);
/// Throws MalformedInput when the container disagrees with the word, and InvalidInput
/// for the empty word.
LabeledMotzkinPath beta_inverse(const Rgf& r, ContainerMode mode);

/// beta on paths without label-1 steps, with the leading 1 dropped and every letter
/// decreased by one: R(1212) in stack mode, R(1221) in queue mode, length |path|.
Rgf beta_reduced(const LabeledMotzkinPath& path, ContainerMode mode);
LabeledMotzkinPath beta_reduced_inverse(const Rgf& r, ContainerMode mode);

// ---- RGFs with weakly increasing stripped word -> Av(321) ----

/// Entries at first-occurrence positions become the ltr-maxima of the permutation;
/// the remaining letters r_{i_1}, r_{i_2}, ... map to s_1 = r_{i_1},
/// s_j = s_{j-1} + (r_{i_j} - r_{i_{j-1}}) + 1. Accepts exactly the RGFs whose
/// stripped word is weakly increasing; otherwise throws InvalidAt with the 1-based
/// position (in R) of the first letter breaking monotonicity.
Permutation nr_to_av321(const Rgf& r);
/// Throws InvalidInput if pi contains 321.
Rgf av321_to_nr(const Permutation& pi);

// ---- gamma: R(12231) -> R(12321) ----

/// Positions (i1, i2, i3), 1-based, or one of the conventional sentinels.
struct TripleIndex {
  std::array<std::size_t, 3> at{0, 0, 0};

  bool is_zero() const noexcept { return at[0] == 0 && at[1] == 0 && at[2] == 0; }
  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

std::string to_string(const TripleIndex& t);

/// Lexicographically largest occurrence of 321, or 000.
TripleIndex rm_321(std::span<const int> word);
/// Lexicographically smallest occurrence of 231 whose first letter is not the first
/// occurrence of its value, or (n+1, n+1, n+1).
TripleIndex lm_tilde231(std::span<const int> word);

struct GammaStep {
  TripleIndex swapped;
  Rgf after;
};

/// Swaps r_{i1}, r_{i2} of rm_321 until the word avoids 321.
/// Throws InvalidInput if R contains the tilde-231 pattern.
Rgf gamma(const Rgf& r);
std::vector<GammaStep> gamma_steps(const Rgf& r);
/// Swaps r_{j1}, r_{j2} of lm_tilde231 until none is left.
/// Throws InvalidInput if R contains 321.
Rgf gamma_inverse(const Rgf& r);
std::vector<GammaStep> gamma_inverse_steps(const Rgf& r);

}  // namespace patternsort
