#include "patternsort/machine.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "json.hpp"
#include "patternsort/error.hpp"
#include "patternsort/parallel.hpp"
#include "patternsort/pattern.hpp"

namespace patternsort {

namespace {

void require_machine_pattern(const Permutation& sigma) {
  require(sigma.size() >= 2, "sigma must have length at least 2 (got " +
                                 std::to_string(sigma.size()) + ")");
}

/// Would pushing `incoming` keep the stack (stored bottom to top) sigma-avoiding?
/// The stack already avoids sigma, so only occurrences using the new top matter.
bool push_allowed(const std::vector<int>& stack, int incoming, const Permutation& sigma,
                  std::vector<int>& scratch) {
  if (stack.size() + 1 < sigma.size()) return true;
  scratch.clear();
  scratch.push_back(incoming);
  scratch.insert(scratch.end(), stack.rbegin(), stack.rend());
  return !contains(scratch, sigma.values(), Anchor::First);
}

template <class OnEvent>
std::vector<int> run_pass(const Permutation& pi, const Permutation& sigma, OnEvent&& on_event) {
  require_machine_pattern(sigma);
  std::vector<int> stack, output, scratch;
  output.reserve(pi.size());
  for (int x : pi) {
    while (!stack.empty() && !push_allowed(stack, x, sigma, scratch)) {
      output.push_back(stack.back());
      stack.pop_back();
      on_event(StackOp::Pop, output.back(), stack);
    }
    stack.push_back(x);
    on_event(StackOp::Push, x, stack);
  }
  while (!stack.empty()) {
    output.push_back(stack.back());
    stack.pop_back();
    on_event(StackOp::Pop, output.back(), stack);
  }
  return output;
}

const Permutation& pattern_231() {
  static const Permutation p{2, 3, 1};
  return p;
}

}  // namespace

MachineTrace sigma_stack_pass(const Permutation& pi, const Permutation& sigma) {
  MachineTrace trace;
  auto record = [&](StackOp op, int value, const std::vector<int>& stack) {
    trace.events.push_back({op, value, std::vector<int>(stack.rbegin(), stack.rend())});
  };
  trace.output = Permutation(run_pass(pi, sigma, record));
  return trace;
}

Permutation sigma_stack_output(const Permutation& pi, const Permutation& sigma) {
  return Permutation(run_pass(pi, sigma, [](StackOp, int, const std::vector<int>&) {}));
}

Permutation stacksort(const Permutation& pi) {
  static const Permutation decreasing_pair{2, 1};
  return sigma_stack_output(pi, decreasing_pair);
}

bool is_sigma_sortable(const Permutation& pi, const Permutation& sigma) {
  return !contains_classical(sigma_stack_output(pi, sigma), pattern_231());
}

namespace {

/// Permutations of length n starting with `first`, lexicographic, filtered.
std::vector<Permutation> select_with_first(std::size_t n, int first,
                                           const PermutationPredicate& keep) {
  std::vector<int> v;
  v.reserve(n);
  v.push_back(first);
  for (int x = 1; x <= static_cast<int>(n); ++x) {
    if (x != first) v.push_back(x);
  }
  std::vector<Permutation> out;
  do {
    Permutation pi(v);
    if (keep(pi)) out.push_back(std::move(pi));
  } while (std::next_permutation(v.begin() + 1, v.end()));
  return out;
}

}  // namespace

std::vector<Permutation> select_permutations(std::size_t n, const PermutationPredicate& keep,
                                             std::size_t cap) {
  require_within_cap(n, cap, "permutation enumeration");
  if (n == 0) return keep(Permutation{}) ? std::vector<Permutation>{Permutation{}}
                                         : std::vector<Permutation>{};
  return parallel_collect<Permutation>(
      n, [&](std::size_t i) { return select_with_first(n, static_cast<int>(i + 1), keep); });
}

std::vector<Permutation> select_permutations_serial(std::size_t n,
                                                    const PermutationPredicate& keep,
                                                    std::size_t cap) {
  require_within_cap(n, cap, "permutation enumeration");
  std::vector<Permutation> out;
  for (auto& pi : all_permutations(n)) {
    if (keep(pi)) out.push_back(std::move(pi));
  }
  return out;
}

std::vector<Permutation> enumerate_sortable(std::size_t n, const Permutation& sigma,
                                            std::size_t cap) {
  require_machine_pattern(sigma);
  return select_permutations(
      n, [&](const Permutation& pi) { return is_sigma_sortable(pi, sigma); }, cap);
}

std::vector<Permutation> enumerate_sortable_serial(std::size_t n, const Permutation& sigma,
                                                   std::size_t cap) {
  require_machine_pattern(sigma);
  return select_permutations_serial(
      n, [&](const Permutation& pi) { return is_sigma_sortable(pi, sigma); }, cap);
}

Permutation sigma_hat(const Permutation& sigma) {
  require(sigma.size() >= 2, "sigma_hat needs length at least 2");
  std::vector<int> v(sigma.begin(), sigma.end());
  std::swap(v[0], v[1]);
  return Permutation(std::move(v));
}

namespace {

void compare_sets(const std::vector<Permutation>& sortable,
                  const std::vector<Permutation>& described, CharacterizationReport& report) {
  std::vector<Permutation> only_sortable, only_described;
  std::set_difference(sortable.begin(), sortable.end(), described.begin(), described.end(),
                      std::back_inserter(only_sortable));
  std::set_difference(described.begin(), described.end(), sortable.begin(), sortable.end(),
                      std::back_inserter(only_described));
  report.holds = only_sortable.empty() && only_described.empty();
  constexpr std::size_t kShown = 5;
  for (std::size_t i = 0; i < std::min(kShown, only_sortable.size()); ++i) {
    report.counterexamples.push_back("sortable but not described: " +
                                     to_string(only_sortable[i]));
  }
  for (std::size_t i = 0; i < std::min(kShown, only_described.size()); ++i) {
    report.counterexamples.push_back("described but not sortable: " +
                                     to_string(only_described[i]));
  }
}

}  // namespace

CharacterizationReport verify_characterizations(std::size_t n, const Permutation& sigma,
                                                std::size_t cap) {
  require_machine_pattern(sigma);
  require_within_cap(n, cap, "verify_characterizations");
  CharacterizationReport report;
  report.sigma = sigma;
  report.n = n;
  const auto sortable = enumerate_sortable(n, sigma, cap);

  if (sigma == Permutation{1, 3, 2}) {
    report.claim = "Sort_n(132) = Av_n(2314, mu)";
    const Permutation p2314{2, 3, 1, 4};
    const auto described = select_permutations(
        n,
        [&](const Permutation& pi) {
          return !contains_classical(pi, p2314) && !contains_mesh(pi, mu());
        },
        cap);
    compare_sets(sortable, described, report);
  } else if (contains_classical(sigma_hat(sigma), pattern_231())) {
    const Permutation reversed = sigma.reversed();
    report.claim = "Sort_n(" + to_compact_string(sigma.values()) + ") = Av_n(132, " +
                   to_compact_string(reversed.values()) + ")";
    const Permutation p132{1, 3, 2};
    const auto described = select_permutations(
        n,
        [&](const Permutation& pi) {
          return !contains_classical(pi, p132) && !contains_classical(pi, reversed);
        },
        cap);
    compare_sets(sortable, described, report);
    return report;
  } else {
    report.claim = "Sort(" + to_compact_string(sigma.values()) + ") is not a permutation class";
  }

  // Non-class witness: a sortable permutation with an unsortable one-point deletion.
  for (std::size_t m = 2; m <= n && !report.non_class_witness; ++m) {
    for (const auto& pi : m == n ? sortable : enumerate_sortable(m, sigma, cap)) {
      for (std::size_t drop = 0; drop < m && !report.non_class_witness; ++drop) {
        std::vector<int> rest;
        for (std::size_t i = 0; i < m; ++i) {
          if (i != drop) rest.push_back(pi[i]);
        }
        Permutation pattern = standardize(rest);
        if (!is_sigma_sortable(pattern, sigma)) report.non_class_witness.emplace(pi, pattern);
      }
      if (report.non_class_witness) break;
    }
  }
  return report;
}

bool stack_shape_check(const Permutation& pi) {
  static const Permutation sigma{1, 3, 2};
  require(is_sigma_sortable(pi, sigma), "stack_shape_check: " + to_string(pi) +
                                            " is not 132-sortable");
  const std::size_t n = pi.size();
  // block_of[i] = index (1-based) of the block holding position i, 0 for ltr-minima.
  std::vector<std::size_t> block_of(n, 0);
  std::vector<int> minima;
  for (std::size_t i = 0; i < n; ++i) {
    if (minima.empty() || pi[i] < minima.back()) {
      minima.push_back(pi[i]);
    } else {
      block_of[i] = minima.size();
    }
  }

  auto shape_ok = [&](const std::vector<int>& bottom_to_top, std::size_t block) {
    if (bottom_to_top.size() < block) return false;
    for (std::size_t j = 0; j < block; ++j) {
      if (bottom_to_top[j] != minima[j]) return false;
    }
    for (std::size_t j = block; j < bottom_to_top.size(); ++j) {
      const int b = bottom_to_top[j];
      const auto pos = static_cast<std::size_t>(
          std::find(pi.begin(), pi.end(), b) - pi.begin());
      if (block_of[pos] != block) return false;
      if (j > block && bottom_to_top[j - 1] >= b) return false;
    }
    return true;
  };

  std::size_t next_input = 0;
  bool ok = true;
  std::vector<int> scratch;
  auto check = [&](StackOp op, int, const std::vector<int>& stack) {
    if (op == StackOp::Push) ++next_input;
    if (next_input < n && block_of[next_input] != 0) {
      ok = ok && shape_ok(stack, block_of[next_input]);
    }
  };
  run_pass(pi, sigma, check);
  return ok;
}

std::string trace_to_text(const MachineTrace& trace) {
  std::string out;
  for (const auto& event : trace.events) {
    out += event.op == StackOp::Push ? "PUSH " : "POP ";
    out += std::to_string(event.value);
    out += " | stack: ";
    for (std::size_t i = 0; i < event.stack.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(event.stack[i]);
    }
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const MachineTrace& trace, const Permutation& input,
                          const Permutation& sigma) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& event : trace.events) {
    events.push_back({{"op", event.op == StackOp::Push ? "PUSH" : "POP"},
                      {"value", event.value},
                      {"stack", event.stack}});
  }
  nlohmann::json doc{{"schema", 1},
                     {"input", std::vector<int>(input.begin(), input.end())},
                     {"sigma", std::vector<int>(sigma.begin(), sigma.end())},
                     {"output", std::vector<int>(trace.output.begin(), trace.output.end())},
                     {"events", events}};
  return doc.dump(2);
}

}  // namespace patternsort
