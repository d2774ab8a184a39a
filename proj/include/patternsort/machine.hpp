#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patternsort/permutation.hpp"

namespace patternsort {

inline constexpr std::size_t kDefaultPermutationCap = 10;

enum class StackOp { Push, Pop };

struct TraceEvent {
  StackOp op;
  int value;
  std::vector<int> stack;  ///< sigma-stack after the event, read top to bottom
};

struct MachineTrace {
  std::vector<TraceEvent> events;
  Permutation output;  ///< s_sigma(pi)
};

/// One right-greedy pass of `pi` through a stack whose content, read top to bottom,
/// must avoid `sigma`. Pushes whenever the stack with the new element on top still
/// avoids sigma; otherwise pops. Throws InvalidInput if |sigma| < 2.
MachineTrace sigma_stack_pass(const Permutation& pi, const Permutation& sigma);

/// Output of the sigma-stack without recording a trace.
Permutation sigma_stack_output(const Permutation& pi, const Permutation& sigma);

/// Classical right-greedy Stacksort (the 21-avoiding stack).
Permutation stacksort(const Permutation& pi);

/// pi is sortable by the sigma-machine iff s_sigma(pi) avoids 231.
bool is_sigma_sortable(const Permutation& pi, const Permutation& sigma);

using PermutationPredicate = std::function<bool(const Permutation&)>;

/// All of S_n satisfying `keep`, lexicographic. Splits S_n by first entry and
/// evaluates the parts on OpenMP threads.
std::vector<Permutation> select_permutations(std::size_t n, const PermutationPredicate& keep,
                                             std::size_t cap = kDefaultPermutationCap);
/// Single-threaded reference for select_permutations.
std::vector<Permutation> select_permutations_serial(std::size_t n,
                                                    const PermutationPredicate& keep,
                                                    std::size_t cap = kDefaultPermutationCap);

/// Sort_n(sigma) by brute force over S_n.
std::vector<Permutation> enumerate_sortable(std::size_t n, const Permutation& sigma,
                                            std::size_t cap = kDefaultPermutationCap);
std::vector<Permutation> enumerate_sortable_serial(std::size_t n, const Permutation& sigma,
                                                   std::size_t cap = kDefaultPermutationCap);

/// sigma with its first two entries exchanged.
Permutation sigma_hat(const Permutation& sigma);

struct CharacterizationReport {
  Permutation sigma;
  std::size_t n = 0;
  std::string claim;
  bool holds = true;
  std::vector<std::string> counterexamples;
  /// For sigma whose hat avoids 231: a sortable permutation and one of its patterns
  /// (one entry deleted) that is not sortable, if any exists up to length n.
  std::optional<std::pair<Permutation, Permutation>> non_class_witness;
};

/// Checks the known description of Sort_n(sigma):
///  - sigma = 132: Sort_n = Av_n(2314, mu);
///  - hat(sigma) contains 231: Sort_n(sigma) = Av_n(132, reverse(sigma));
///  - otherwise searches for a witness that Sort(sigma) is not downward closed.
CharacterizationReport verify_characterizations(std::size_t n, const Permutation& sigma,
                                                std::size_t cap = kDefaultPermutationCap);

/// For 132-sortable pi: whenever the next input element lies in block B_i, the stack
/// reads bottom to top m_1 ... m_i followed by increasing elements of B_i.
/// Throws InvalidInput if pi is not 132-sortable.
bool stack_shape_check(const Permutation& pi);

/// "PUSH v | stack: t,...,b" / "POP v | stack: ..." one per line.
std::string trace_to_text(const MachineTrace& trace);
std::string trace_to_json(const MachineTrace& trace, const Permutation& input,
                          const Permutation& sigma);

}  // namespace patternsort
