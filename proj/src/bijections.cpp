#include "patternsort/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "patternsort/error.hpp"
#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/pattern.hpp"

namespace patternsort {

Rgf phi(const Permutation& pi, PhiMode mode) {
  if (pi.empty()) return Rgf{};
  if (mode == PhiMode::Strict) {
    require(is_sigma_sortable(pi, Permutation{1, 3, 2}),
            "phi: " + to_string(pi) + " is not 132-sortable");
  }
  const GridDecomposition grid = decompose(pi);
  std::vector<int> letters;
  letters.reserve(pi.size());
  for (int v : pi) letters.push_back(static_cast<int>(grid.strip_of_value(v)));
  return Rgf(std::move(letters));
}

Permutation phi_inverse(const Rgf& r) {
  require(!rgf_contains(r, {1, 2, 2, 3, 1}), "phi_inverse: " + to_string(r) + " contains 12231");
  Permutation pi;
  int max = 0;
  for (std::size_t l = 0; l < r.size(); ++l) {
    const int letter = r[l];
    if (letter > max) {
      max = letter;
      pi = append_between(pi, 0);
      continue;
    }
    const GridDecomposition grid = decompose(pi);
    const auto cell = static_cast<std::size_t>(letter);
    const InsertionResult result =
        insert_into_sortable(pi, {legal_kind(pi, grid, cell), cell});
    if (!result.accepted()) {
      throw InvalidAt("phi_inverse: letter at position " + std::to_string(l + 1) +
                          " cannot be inserted (" + to_string(result.rejection) + ")",
                      l + 1);
    }
    pi = *result.permutation;
  }
  return pi;
}

DyckPath psi(const Rgf& r) {
  require(!rgf_contains(r, {1, 2, 2, 1}), "psi: " + to_string(r) + " contains 1221");
  if (r.empty()) return DyckPath{};
  std::vector<Step> steps{Step::U, Step::D};
  int max = 1;
  int max_repeated = 0;
  for (std::size_t l = 1; l < r.size(); ++l) {
    const int j = r[l];
    const int t = max_repeated == 0 ? 1 : max_repeated;
    std::size_t run = 0;
    while (run < steps.size() && steps[steps.size() - 1 - run] == Step::D) ++run;
    if (run != static_cast<std::size_t>(max + 1 - t)) {
      throw std::logic_error("psi: final descent does not match the active sites");
    }
    // Sites t..M+1 correspond to the run+1 insertion slots of the final descent.
    // Slot s (1-based, from the left of the run) leaves a final descent of run + 2 - s,
    // which must equal the number of active sites of R j minus one.
    std::size_t s;
    if (j == max) {
      s = run + 1;
    } else if (j == max + 1) {
      s = 1;
    } else {
      s = static_cast<std::size_t>(j - t + 2);
    }
    const auto at = static_cast<std::ptrdiff_t>(steps.size() - run + s - 1);
    steps.insert(steps.begin() + at, {Step::U, Step::D});
    if (j <= max) max_repeated = std::max(max_repeated, j);
    max = std::max(max, j);
  }
  return DyckPath(std::move(steps));
}

Rgf psi_inverse(const DyckPath& path) {
  if (path.size() == 0) return Rgf{};
  struct Slot {
    std::size_t s;
    std::size_t run;
  };
  std::vector<Slot> history;
  DyckPath current = path;
  while (current.semilength() > 1) {
    const auto& steps = current.steps();
    std::size_t last_up = steps.size() - 1;
    while (steps[last_up] != Step::U) --last_up;
    const std::size_t after = steps.size() - (last_up + 2);
    DyckPath parent = dyck_parent(current);
    const std::size_t run = final_descent_length(parent);
    history.push_back({run - after + 1, run});
    current = std::move(parent);
  }
  std::vector<int> letters{1};
  int max = 1;
  int max_repeated = 0;
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    const int t = max_repeated == 0 ? 1 : max_repeated;
    if (it->run != static_cast<std::size_t>(max + 1 - t)) {
      throw std::logic_error("psi_inverse: final descent does not match the active sites");
    }
    int j;
    if (it->s == it->run + 1) {
      j = max;
    } else if (it->s == 1) {
      j = max + 1;
    } else {
      j = static_cast<int>(it->s) + t - 2;
    }
    letters.push_back(j);
    if (j <= max) max_repeated = std::max(max_repeated, j);
    max = std::max(max, j);
  }
  return Rgf(std::move(letters));
}

int BetaContainer::accessible() const {
  if (content_.empty()) throw MalformedInput("beta: container is empty");
  return mode_ == ContainerMode::Stack ? content_.back() : content_.front();
}

int BetaContainer::take() {
  const int letter = accessible();
  if (mode_ == ContainerMode::Stack) {
    content_.pop_back();
  } else {
    content_.pop_front();
  }
  return letter;
}

Rgf beta(const LabeledMotzkinPath& path, ContainerMode mode) {
  BetaContainer container(mode);
  std::vector<int> letters{1};
  int max = 1;
  for (const LabeledStep& step : path.steps()) {
    switch (step.step) {
      case Step::U:
        letters.push_back(++max);
        container.push(max);
        break;
      case Step::D:
        letters.push_back(container.take());
        break;
      case Step::H:
        if (step.label == 0) {
          letters.push_back(++max);
        } else if (step.label == 1) {
          letters.push_back(1);
        } else {
          letters.push_back(container.accessible());
        }
        break;
    }
  }
  return Rgf(std::move(letters));
}

LabeledMotzkinPath beta_inverse(const Rgf& r, ContainerMode mode) {
  require(!r.empty(), "beta_inverse: empty word");
  const auto m = static_cast<std::size_t>(r.max());
  std::vector<std::size_t> count(m + 1, 0), first(m + 1, 0), last(m + 1, 0);
  for (std::size_t l = r.size(); l-- > 0;) {
    const auto v = static_cast<std::size_t>(r[l]);
    if (count[v]++ == 0) last[v] = l;
    first[v] = l;
  }
  BetaContainer container(mode);
  std::vector<LabeledStep> steps;
  for (std::size_t l = 1; l < r.size(); ++l) {
    const int v = r[l];
    const auto uv = static_cast<std::size_t>(v);
    if (v == 1) {
      steps.push_back({Step::H, 1});
    } else if (count[uv] == 1) {
      steps.push_back({Step::H, 0});
    } else if (l == first[uv]) {
      steps.push_back({Step::U, 0});
      container.push(v);
    } else if (l == last[uv]) {
      if (container.empty() || container.take() != v) {
        throw MalformedInput("beta_inverse: letter " + std::to_string(v) + " at position " +
                             std::to_string(l + 1) + " is not accessible in the container");
      }
      steps.push_back({Step::D, 0});
    } else {
      if (container.empty() || container.accessible() != v) {
        throw MalformedInput("beta_inverse: letter " + std::to_string(v) + " at position " +
                             std::to_string(l + 1) + " is not accessible in the container");
      }
      steps.push_back({Step::H, 2});
    }
  }
  return LabeledMotzkinPath(std::move(steps));
}

Rgf beta_reduced(const LabeledMotzkinPath& path, ContainerMode mode) {
  for (const auto& step : path.steps()) {
    require(!(step.step == Step::H && step.label == 1), "beta_reduced: path uses label 1");
  }
  const Rgf full = beta(path, mode);
  std::vector<int> letters;
  for (std::size_t i = 1; i < full.size(); ++i) letters.push_back(full[i] - 1);
  return Rgf(std::move(letters));
}

LabeledMotzkinPath beta_reduced_inverse(const Rgf& r, ContainerMode mode) {
  std::vector<int> letters{1};
  for (int v : r) letters.push_back(v + 1);
  return beta_inverse(Rgf(std::move(letters)), mode);
}

Permutation nr_to_av321(const Rgf& r) {
  const std::size_t n = r.size();
  std::vector<bool> is_max(n, false);
  std::vector<std::size_t> rest;
  int prefix_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] > prefix_max) {
      is_max[i] = true;
      prefix_max = r[i];
    } else {
      if (!rest.empty() && r[i] < r[rest.back()]) {
        throw InvalidAt("nr_to_av321: letters outside the ltr-maxima of " + to_string(r) +
                            " are not weakly increasing at position " + std::to_string(i + 1),
                        i + 1);
      }
      rest.push_back(i);
    }
  }
  std::vector<int> values(n, 0);
  std::vector<bool> used(n + 2, false);
  int s = 0;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    s = j == 0 ? r[rest[0]] : s + (r[rest[j]] - r[rest[j - 1]]) + 1;
    if (s < 1 || static_cast<std::size_t>(s) > n) {
      throw InvalidAt("nr_to_av321: value " + std::to_string(s) + " out of range", rest[j] + 1);
    }
    values[rest[j]] = s;
    used[static_cast<std::size_t>(s)] = true;
  }
  int next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_max[i]) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    values[i] = next++;
  }
  return Permutation(std::move(values));
}

Rgf av321_to_nr(const Permutation& pi) {
  require(!contains(pi.values(), std::vector<int>{3, 2, 1}),
          "av321_to_nr: " + to_string(pi) + " contains 321");
  std::vector<int> letters(pi.size(), 0);
  int prefix_max = 0;
  int block = 0;
  int previous_s = 0;
  int previous_r = 0;
  bool first_rest = true;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] > prefix_max) {
      prefix_max = pi[i];
      letters[i] = ++block;
      continue;
    }
    const int r = first_rest ? pi[i] : previous_r + (pi[i] - previous_s) - 1;
    letters[i] = r;
    previous_r = r;
    previous_s = pi[i];
    first_rest = false;
  }
  Rgf result;
  try {
    result = Rgf(letters);
  } catch (const InvalidRgf&) {
    throw InvalidInput("av321_to_nr: " + to_string(pi) + " has no preimage");
  }
  if (nr_to_av321(result) != pi) {
    throw InvalidInput("av321_to_nr: " + to_string(pi) + " has no preimage");
  }
  return result;
}

std::string to_string(const TripleIndex& t) {
  return "(" + std::to_string(t.at[0]) + "," + std::to_string(t.at[1]) + "," +
         std::to_string(t.at[2]) + ")";
}

TripleIndex rm_321(std::span<const int> word) {
  const std::size_t n = word.size();
  for (std::size_t a = n; a-- > 0;) {
    for (std::size_t b = n; b-- > a + 1;) {
      if (!(word[a] > word[b])) continue;
      for (std::size_t c = n; c-- > b + 1;) {
        if (word[b] > word[c]) return {{a + 1, b + 1, c + 1}};
      }
    }
  }
  return {};
}

TripleIndex lm_tilde231(std::span<const int> word) {
  const std::size_t n = word.size();
  int prefix_max = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const bool first_occurrence = word[a] > prefix_max;
    prefix_max = std::max(prefix_max, word[a]);
    if (first_occurrence) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!(word[b] > word[a])) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (word[c] < word[a]) return {{a + 1, b + 1, c + 1}};
      }
    }
  }
  return {{n + 1, n + 1, n + 1}};
}

namespace {

bool is_sentinel(const TripleIndex& t, std::size_t n) {
  return t == TripleIndex{{n + 1, n + 1, n + 1}};
}

std::size_t iteration_bound(std::size_t n) { return n * n * n + 1; }

}  // namespace

std::vector<GammaStep> gamma_steps(const Rgf& r) {
  const std::size_t n = r.size();
  require(is_sentinel(lm_tilde231(r.letters()), n),
          "gamma: " + to_string(r) + " contains an occurrence of 231 starting at a repeated letter");
  std::vector<int> word(r.begin(), r.end());
  std::vector<GammaStep> steps;
  TripleIndex t = rm_321(word);
  while (!t.is_zero()) {
    if (steps.size() >= iteration_bound(n)) throw std::logic_error("gamma: iteration bound exceeded");
    std::swap(word[t.at[0] - 1], word[t.at[1] - 1]);
    steps.push_back({t, Rgf(word)});
    const TripleIndex next = rm_321(word);
    if (!(next < t)) throw std::logic_error("gamma: rm(321) did not decrease");
    t = next;
  }
  return steps;
}

Rgf gamma(const Rgf& r) {
  auto steps = gamma_steps(r);
  return steps.empty() ? r : steps.back().after;
}

std::vector<GammaStep> gamma_inverse_steps(const Rgf& r) {
  const std::size_t n = r.size();
  require(rm_321(r.letters()).is_zero(), "gamma_inverse: " + to_string(r) + " contains 321");
  std::vector<int> word(r.begin(), r.end());
  std::vector<GammaStep> steps;
  for (TripleIndex t = lm_tilde231(word); !is_sentinel(t, n); t = lm_tilde231(word)) {
    if (steps.size() >= iteration_bound(n)) {
      throw std::logic_error("gamma_inverse: iteration bound exceeded");
    }
    std::swap(word[t.at[0] - 1], word[t.at[1] - 1]);
    steps.push_back({t, Rgf(word)});
  }
  return steps;
}

Rgf gamma_inverse(const Rgf& r) {
  auto steps = gamma_inverse_steps(r);
  return steps.empty() ? r : steps.back().after;
}

}  // namespace patternsort
