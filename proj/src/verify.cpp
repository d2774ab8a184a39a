#include "patternsort/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "patternsort/bijections.hpp"
#include "patternsort/error.hpp"
#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/paths.hpp"
#include "patternsort/pattern.hpp"
#include "patternsort/rgf.hpp"
#include "patternsort/sequences.hpp"
#include "patternsort/stats.hpp"

namespace patternsort {

namespace {

using Outcome = std::optional<std::string>;
using Word = std::vector<int>;

const Permutation& p132() {
  static const Permutation p{1, 3, 2};
  return p;
}

std::string at_n(std::size_t n, const std::string& what) {
  return "n=" + std::to_string(n) + ": " + what;
}

std::string word_text(std::span<const int> w) { return to_compact_string(w); }

std::size_t count_letter(const Rgf& r, int letter) {
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), letter));
}

// ---------------------------------------------------------------- machine

Outcome machine_count(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto sortable = enumerate_sortable(n, p132());
    if (BigInt(sortable.size()) != a007317(n)) {
      return at_n(n, std::to_string(sortable.size()) + " sortable, formula gives " +
                         a007317(n).str());
    }
  }
  return std::nullopt;
}

Outcome machine_characterization(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto report = verify_characterizations(n, p132());
    if (!report.holds) return at_n(n, report.counterexamples.front());
  }
  return std::nullopt;
}

Outcome machine_class_theorem(std::size_t nmax) {
  for (const Permutation& sigma : all_permutations(3)) {
    if (!contains(sigma_hat(sigma).values(), std::vector<int>{2, 3, 1})) continue;
    for (std::size_t n = 1; n <= nmax; ++n) {
      const auto report = verify_characterizations(n, sigma);
      if (!report.holds) {
        return at_n(n, "sigma=" + to_compact_string(sigma.values()) + ": " +
                           report.counterexamples.front());
      }
    }
  }
  const Permutation host{2, 4, 1, 3};
  if (!is_sigma_sortable(host, p132()) || is_sigma_sortable(p132(), p132()) ||
      !contains_classical(host, p132())) {
    return std::string("the pair (2413, 132) does not witness non-closure");
  }
  return std::nullopt;
}

Outcome machine_stacksort(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const bool sorted = stacksort(pi) == Permutation::identity(n);
      if (sorted == contains(pi.values(), std::vector<int>{2, 3, 1})) {
        return at_n(n, "stacksort disagrees with 231-avoidance on " + to_string(pi));
      }
    }
  }
  return std::nullopt;
}

Outcome machine_trace_conservation(std::size_t nmax) {
  for (std::size_t m = 2; m <= 3; ++m) {
    for (const Permutation& sigma : all_permutations(m)) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        for (const auto& pi : all_permutations(n)) {
          const MachineTrace trace = sigma_stack_pass(pi, sigma);
          std::vector<int> pushed, popped;
          for (const auto& e : trace.events) {
            (e.op == StackOp::Push ? pushed : popped).push_back(e.value);
            if (contains(e.stack, sigma.values())) {
              return at_n(n, "stack " + word_text(e.stack) + " contains sigma=" +
                                 to_compact_string(sigma.values()) + " on " + to_string(pi));
            }
          }
          const std::vector<int> input(pi.begin(), pi.end());
          const std::vector<int> output(trace.output.begin(), trace.output.end());
          if (pushed != input || popped != output) {
            return at_n(n, "trace does not conserve " + to_string(pi));
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome machine_prefix_closure(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      const Permutation prefix = pi.without_last();
      if (!is_sigma_sortable(prefix, p132())) {
        return at_n(n, "prefix of " + to_string(pi) + " is not sortable");
      }
    }
  }
  return std::nullopt;
}

Outcome machine_stack_shape(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      if (!stack_shape_check(pi)) return at_n(n, "stack shape fails for " + to_string(pi));
    }
  }
  return std::nullopt;
}

Outcome machine_suffix_law(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      const GridDecomposition grid = decompose(pi);
      const Permutation out = sigma_stack_output(pi, p132());
      std::vector<int> expected;
      for (const auto& block : grid.blocks) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        expected.insert(expected.end(), sorted.begin(), sorted.end());
      }
      std::vector<int> actual;
      std::size_t at = 0;
      for (const auto& block : grid.blocks) {
        std::vector<int> part(out.begin() + static_cast<std::ptrdiff_t>(at),
                              out.begin() + static_cast<std::ptrdiff_t>(at + block.size()));
        std::sort(part.begin(), part.end());
        actual.insert(actual.end(), part.begin(), part.end());
        at += block.size();
      }
      for (std::size_t i = grid.minima.size(); i-- > 0;) {
        expected.push_back(grid.minima[i]);
        actual.push_back(out[at++]);
      }
      if (actual != expected) {
        return at_n(n, "output " + to_string(out) + " of " + to_string(pi) +
                           " is not blocks followed by reversed minima");
      }
    }
  }
  return std::nullopt;
}

Outcome machine_sort123(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto sortable = enumerate_sortable(n, Permutation{1, 2, 3});
    if (BigInt(sortable.size()) != catalan_double_partial_sums(n)) {
      return at_n(n, std::to_string(sortable.size()) + " 123-sortable, expected " +
                         catalan_double_partial_sums(n).str());
    }
  }
  return std::nullopt;
}

Outcome perm_mesh_empty_shading(std::size_t nmax) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& tau : all_permutations(k)) {
      const MeshPattern mesh(tau, {});
      for (std::size_t n = 0; n <= nmax; ++n) {
        for (const auto& pi : all_permutations(n)) {
          if (contains_mesh(pi, mesh) != contains_classical(pi, tau)) {
            return at_n(n, "unshaded " + to_compact_string(tau.values()) + " on " + to_string(pi));
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome perm_mu_predicate(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& pi : all_permutations(n)) {
      if (mu_predicate(pi) != contains_mesh(pi, mu())) {
        return at_n(n, "mu predicate disagrees on " + to_string(pi));
      }
    }
  }
  return std::nullopt;
}

Outcome perm_layered(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::size_t layered = 0;
    for (const auto& pi : all_permutations(n)) {
      if (is_layered(pi) != is_layered_by_avoidance(pi)) {
        return at_n(n, "layered tests disagree on " + to_string(pi));
      }
      if (standardize(pi.values()) != pi) return at_n(n, "standardize moved " + to_string(pi));
      layered += is_layered(pi) ? 1 : 0;
    }
    if (layered != (std::size_t{1} << (n - 1))) {
      return at_n(n, std::to_string(layered) + " layered permutations");
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- grid

Outcome grid_generator(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (generate_sortable(n) != enumerate_sortable(n, p132())) {
      return at_n(n, "generated set differs from brute force");
    }
  }
  return std::nullopt;
}

Outcome grid_children(std::size_t nmax) {
  for (std::size_t n = 1; n < nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      const std::size_t t = active_cells(pi).size();
      const auto children = sortable_children(pi);
      if (children.size() != t + 1) {
        return at_n(n, to_string(pi) + " has " + std::to_string(t) + " active cells but " +
                           std::to_string(children.size()) + " children");
      }
      for (const auto& child : children) {
        if (!is_sigma_sortable(child, p132()) || child.without_last() != pi) {
          return at_n(n, "bad child " + to_string(child) + " of " + to_string(pi));
        }
      }
    }
  }
  return std::nullopt;
}

Outcome grid_unique_parent(std::size_t nmax) {
  std::vector<Permutation> level{Permutation{}};
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::vector<Permutation> next;
    for (const auto& pi : level) {
      for (auto& child : sortable_children(pi)) next.push_back(std::move(child));
    }
    std::sort(next.begin(), next.end());
    if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
      return at_n(n, "a permutation is reached twice");
    }
    if (next != enumerate_sortable(n, p132())) return at_n(n, "tree misses a permutation");
    level = std::move(next);
  }
  return std::nullopt;
}

Outcome grid_reconstruction(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : all_permutations(n)) {
      if (reconstruct(decompose(pi)) != pi) return at_n(n, "cannot rebuild " + to_string(pi));
    }
  }
  return std::nullopt;
}

Outcome grid_cell_inversions(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      const GridDecomposition grid = decompose(pi);
      std::vector<std::size_t> position(n + 1);
      for (std::size_t p = 0; p < n; ++p) position[pi[p]] = p;
      for (std::size_t i = 1; i <= grid.strips(); ++i) {
        for (std::size_t j = 1; j <= grid.strips(); ++j) {
          const auto& cell = grid.cell(i, j);
          for (std::size_t a = 0; a < cell.size(); ++a) {
            for (std::size_t b = a + 1; b < cell.size(); ++b) {
              if (cell[a] < cell[b]) continue;
              bool separated = false;
              for (std::size_t p = position[cell[a]] + 1; p < position[cell[b]]; ++p) {
                separated = separated || pi[p] < grid.minima[i - 1];
              }
              if (!separated) {
                return at_n(n, "inversion " + std::to_string(cell[a]) + "," +
                                   std::to_string(cell[b]) + " in a cell of " + to_string(pi));
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome grid_hstrips(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& pi : enumerate_sortable(n, p132())) {
      const GridDecomposition grid = decompose(pi);
      for (const auto& strip : grid.hstrips) {
        if (!strip.empty() && !is_colayered(standardize(strip))) {
          return at_n(n, "strip " + word_text(strip) + " of " + to_string(pi) +
                             " is not co-layered");
        }
      }
      if (!structural_check(pi).passed()) {
        return at_n(n, "sortable " + to_string(pi) + " fails a structural condition");
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- rgf

Outcome rgf_partition_roundtrip(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      const SetPartition p = rgf_to_partition(r);
      if (partition_to_rgf(p) != r || parse_partition(to_string(p)) != p ||
          parse_rgf(to_string(r)) != r) {
        return at_n(n, "round trip fails for " + to_string(r));
      }
    }
  }
  return std::nullopt;
}

std::vector<Word> standardized_patterns(std::size_t max_length) {
  std::set<Word> out;
  Word w;
  std::function<void()> grow = [&] {
    if (!w.empty()) out.insert(standardize_word(w));
    if (w.size() == max_length) return;
    for (int v = 1; v <= static_cast<int>(max_length); ++v) {
      w.push_back(v);
      grow();
      w.pop_back();
    }
  };
  grow();
  return {out.begin(), out.end()};
}

Outcome rgf_prefix_lemma(std::size_t nmax) {
  const auto patterns = standardized_patterns(4);
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      for (const Word& q : patterns) {
        Word extended;
        for (int v = 1; v < q.front(); ++v) extended.push_back(v);
        extended.insert(extended.end(), q.begin(), q.end());
        if (rgf_contains(r, q) != rgf_contains(r, extended)) {
          return at_n(n, to_string(r) + " separates " + word_text(q) + " and " +
                             word_text(extended));
        }
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_w_subword(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      if (rgf_contains(r, {1, 2, 2, 1}) == is_weakly_increasing(w_subword(r))) {
        return at_n(n, "w-subword test fails on " + to_string(r));
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_active_sites(std::size_t nmax) {
  for (std::size_t n = 1; n < nmax; ++n) {
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const SiteInterval sites = active_sites_1221(r);
      for (int j = 1; j <= r.max() + 1; ++j) {
        Word w(r.begin(), r.end());
        w.push_back(j);
        if (sites.contains(j) == rgf_contains(Rgf(w), {1, 2, 2, 1})) {
          return at_n(n, "site " + std::to_string(j) + " of " + to_string(r));
        }
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_lemma_321(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      const bool avoids = !rgf_contains(r, {1, 2, 3, 2, 1});
      if (repeated_ltr_maxima(r).empty() && avoids != is_weakly_increasing(strip_ltr_maxima(r))) {
        return at_n(n, "stripped-word test fails on " + to_string(r));
      }
      const Rgf a = alpha(r);
      if (!repeated_ltr_maxima(a).empty() || avoids == rgf_contains(a, {1, 2, 3, 2, 1})) {
        return at_n(n, "alpha fails on " + to_string(r));
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_count_12321(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto words = enumerate_avoiders(n, Word{1, 2, 3, 2, 1});
    if (BigInt(words.size()) != a007317(n)) {
      return at_n(n, std::to_string(words.size()) + " avoiders of 12321");
    }
    std::size_t no_repeats = 0;
    for (const auto& r : words) no_repeats += repeated_ltr_maxima(r).empty() ? 1 : 0;
    if (BigInt(no_repeats) != catalan(n - 1)) {
      return at_n(n, std::to_string(no_repeats) + " avoiders of 12321 without repeated ltr-maxima");
    }
  }
  return std::nullopt;
}

Outcome rgf_wilf_class(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const BigInt expected = a007317(n);
    for (const auto& q : wilf_class_patterns()) {
      const auto count = enumerate_avoiders(n, q).size();
      if (BigInt(count) != expected) {
        return at_n(n, word_text(q) + " has " + std::to_string(count) + " avoiders, expected " +
                           expected.str());
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_catalan_patterns(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax + 2; ++n) {
    for (const Word& q : {Word{1, 2, 2, 1}, Word{1, 2, 1, 2}}) {
      const auto count = enumerate_avoiders(n, q).size();
      if (BigInt(count) != catalan(n)) {
        return at_n(n, word_text(q) + " has " + std::to_string(count) + " avoiders");
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_equivalent_patterns(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      const bool a = rgf_contains(r, {1, 2, 2, 3, 1});
      const bool tilde = lm_tilde231(r.letters()) != TripleIndex{{n + 1, n + 1, n + 1}};
      if (a != rgf_contains(r, {2, 2, 3, 1}) || a != tilde) {
        return at_n(n, "12231, 2231 and tilde-231 disagree on " + to_string(r));
      }
    }
  }
  return std::nullopt;
}

Outcome rgf_pruned_enumeration(std::size_t nmax) {
  const std::vector<Word> patterns{{1, 2, 1}, {1, 2, 2, 1}, {1, 2, 3, 2, 1}, {2, 2, 3, 1},
                                   {1, 1}, {1, 2, 3, 3, 2}};
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (const Word& q : patterns) {
      const auto by_filter = enumerate_avoiders_by_filter(n, q);
      if (enumerate_avoiders(n, q) != by_filter || enumerate_avoiders_serial(n, q) != by_filter) {
        return at_n(n, "pruned enumeration of " + word_text(q) + " differs from filtering");
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- bijections

Outcome bij_phi(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    const auto sortable = enumerate_sortable(n, p132());
    std::vector<Rgf> images;
    for (const auto& pi : sortable) {
      const Rgf r = phi(pi);
      if (phi_inverse(r) != pi) return at_n(n, "phi_inverse(phi(" + to_string(pi) + ")) differs");
      if (static_cast<std::size_t>(r.max()) != count_ltr_minima(pi)) {
        return at_n(n, "max of phi(" + to_string(pi) + ") is not its number of ltr-minima");
      }
      images.push_back(r);
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_avoiders(n, Word{1, 2, 2, 3, 1})) {
      return at_n(n, "image of phi is not R_n(12231)");
    }
  }
  return std::nullopt;
}

Outcome bij_psi(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<DyckPath> images;
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const DyckPath p = psi(r);
      if (psi_inverse(p) != r) return at_n(n, "psi_inverse(psi(" + to_string(r) + ")) differs");
      if (n > 0 && static_cast<std::size_t>(r.max()) != 1 + double_rises(p)) {
        return at_n(n, "max of " + to_string(r) + " is not 1 + double rises of " + to_string(p));
      }
      images.push_back(p);
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_dyck(n)) return at_n(n, "image of psi is not all Dyck paths");
  }
  return std::nullopt;
}

Outcome beta_in_mode(std::size_t nmax, ContainerMode mode, const Word& avoided) {
  const char* name = mode == ContainerMode::Stack ? "stack" : "queue";
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<Rgf> images;
    for (const auto& path : enumerate_labeled_motzkin(n)) {
      const Rgf r = beta(path, mode);
      if (beta_inverse(r, mode) != path) {
        return at_n(n, std::string(name) + " round trip fails on " + to_string(path));
      }
      std::size_t ups = 0, zeros = 0, ones = 0;
      for (const auto& s : path.steps()) {
        ups += s.step == Step::U ? 1 : 0;
        zeros += s.step == Step::H && s.label == 0 ? 1 : 0;
        ones += s.step == Step::H && s.label == 1 ? 1 : 0;
      }
      std::size_t singletons = 0;
      for (int v = 2; v <= r.max(); ++v) singletons += count_letter(r, v) == 1 ? 1 : 0;
      if (ups + zeros != static_cast<std::size_t>(r.max() - 1) ||
          ones != count_letter(r, 1) - 1 || zeros != singletons) {
        return at_n(n, std::string(name) + " statistics fail on " + to_string(path));
      }
      images.push_back(r);
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_avoiders(n + 1, avoided)) {
      return at_n(n, std::string(name) + " image is not R_{n+1}(" + word_text(avoided) + ")");
    }
  }
  return std::nullopt;
}

Outcome bij_beta(std::size_t nmax) {
  if (auto fail = beta_in_mode(nmax, ContainerMode::Stack, {1, 2, 3, 2, 3})) return fail;
  return beta_in_mode(nmax, ContainerMode::Queue, {1, 2, 3, 3, 2});
}

Outcome bij_beta_reduced(std::size_t nmax) {
  for (auto [mode, avoided] : {std::pair{ContainerMode::Stack, Word{1, 2, 1, 2}},
                               std::pair{ContainerMode::Queue, Word{1, 2, 2, 1}}}) {
    for (std::size_t n = 0; n <= nmax; ++n) {
      std::vector<Rgf> images;
      for (const auto& path : enumerate_labeled_motzkin(n)) {
        const auto& steps = path.steps();
        if (std::any_of(steps.begin(), steps.end(),
                        [](const LabeledStep& s) { return s.step == Step::H && s.label == 1; })) {
          continue;
        }
        const Rgf r = beta_reduced(path, mode);
        if (beta_reduced_inverse(r, mode) != path) {
          return at_n(n, "reduced round trip fails on " + to_string(path));
        }
        images.push_back(r);
      }
      std::sort(images.begin(), images.end());
      if (images != enumerate_avoiders(n, avoided)) {
        return at_n(n, "reduced image is not R_n(" + word_text(avoided) + ")");
      }
    }
  }
  return std::nullopt;
}

Outcome bij_av321(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<Permutation> images;
    std::vector<std::size_t> by_max(n + 1, 0);
    for (const auto& r : enumerate_rgfs(n)) {
      if (!is_weakly_increasing(strip_ltr_maxima(r))) continue;
      const Permutation pi = nr_to_av321(r);
      if (contains(pi.values(), Word{3, 2, 1}) || av321_to_nr(pi) != r) {
        return at_n(n, "map fails on " + to_string(r));
      }
      if (ltr_extrema(pi).maxima.size() != static_cast<std::size_t>(r.max())) {
        return at_n(n, "max of " + to_string(r) + " is not the ltr-maxima count of its image");
      }
      ++by_max[static_cast<std::size_t>(r.max())];
      images.push_back(pi);
    }
    std::sort(images.begin(), images.end());
    const auto av321 = select_permutations(
        n, [](const Permutation& p) { return !contains(p.values(), Word{3, 2, 1}); });
    if (images != av321) return at_n(n, "image is not Av_n(321)");
    for (std::size_t k = 0; k <= n; ++k) {
      const BigInt expected = (n == 0) == (k == 0) ? narayana(n, k) : BigInt(0);
      if (BigInt(by_max[k]) != expected) {
        return at_n(n, "maximum " + std::to_string(k) + " occurs " + std::to_string(by_max[k]) +
                           " times, expected " + expected.str());
      }
    }
  }
  return std::nullopt;
}

std::vector<int> sorted_letters(const Rgf& r) {
  std::vector<int> out(r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome bij_gamma(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::vector<Rgf> images;
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 3, 1})) {
      const Rgf g = gamma(r);
      if (gamma_inverse(g) != r || sorted_letters(g) != sorted_letters(r) || g.max() != r.max()) {
        return at_n(n, "gamma fails on " + to_string(r));
      }
      images.push_back(g);
    }
    std::sort(images.begin(), images.end());
    if (images != enumerate_avoiders(n, Word{1, 2, 3, 2, 1})) {
      return at_n(n, "image of gamma is not R_n(12321)");
    }
  }
  return std::nullopt;
}

Outcome bij_minima_pipeline(std::size_t nmax) {
  for (std::size_t n = 0; n + 1 <= nmax; ++n) {
    std::vector<std::size_t> by_minima(n + 2, 0);
    for (const auto& pi : enumerate_sortable(n + 1, p132())) {
      const Rgf r = gamma(phi(pi));
      if (rgf_contains(r, {1, 2, 3, 2, 1}) ||
          static_cast<std::size_t>(r.max()) != count_ltr_minima(pi)) {
        return at_n(n + 1, "gamma(phi(" + to_string(pi) + ")) breaks the pipeline");
      }
      ++by_minima[count_ltr_minima(pi)];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (BigInt(by_minima[k + 1]) != max_distribution_formula(n, k)) {
        return at_n(n + 1, std::to_string(by_minima[k + 1]) + " permutations with " +
                               std::to_string(k + 1) + " ltr-minima, formula gives " +
                               max_distribution_formula(n, k).str());
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- sequences

Outcome seq_path_counts(std::size_t nmax) {
  for (std::size_t n = 0; n <= nmax; ++n) {
    if (BigInt(enumerate_dyck(n).size()) != catalan(n)) return at_n(n, "Dyck count");
    if (BigInt(enumerate_motzkin(n).size()) != motzkin(n)) return at_n(n, "Motzkin count");
    if (BigInt(enumerate_labeled_motzkin(n).size()) != a007317(n + 1)) {
      return at_n(n, "labeled Motzkin count");
    }
    if (enumerate_dyck(n) != enumerate_dyck_serial(n)) return at_n(n, "Dyck enumerations differ");
  }
  return std::nullopt;
}

Outcome seq_narayana(std::size_t nmax) {
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::vector<std::size_t> by_rises(n + 1, 0);
    for (const auto& p : enumerate_dyck(n)) ++by_rises[double_rises(p) + 1];
    BigInt row = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (BigInt(by_rises[k]) != narayana(n, k)) {
        return at_n(n, "paths with " + std::to_string(k - 1) + " double rises: " +
                           std::to_string(by_rises[k]));
      }
      row += narayana(n, k);
    }
    if (row != catalan(n)) return at_n(n, "Narayana row sum");
  }
  return std::nullopt;
}

Outcome seq_dyck_tree(std::size_t nmax) {
  for (std::size_t n = 0; n < nmax; ++n) {
    std::vector<DyckPath> next;
    for (const auto& p : enumerate_dyck(n)) {
      const auto children = dyck_children(p);
      if (n > 0 && children.size() != final_descent_length(p) + 1) {
        return at_n(n, "children count of " + to_string(p));
      }
      for (const auto& c : children) {
        if (dyck_parent(c) != p) return at_n(n, "parent of " + to_string(c));
        next.push_back(c);
      }
    }
    std::sort(next.begin(), next.end());
    if (next != enumerate_dyck(n + 1)) return at_n(n + 1, "tree does not reach every path once");
  }
  return std::nullopt;
}

Outcome seq_continued_fractions(std::size_t nmax) {
  for (std::size_t depth = 1; depth <= nmax + 1; ++depth) {
    const auto a = cf_series(depth, CfVariant::A007317, nmax + 1);
    const auto c = cf_series(depth, CfVariant::Catalan, nmax + 1);
    for (std::size_t i = 0; i < depth && i <= nmax; ++i) {
      if (a[i] != a007317(i + 1)) return "depth " + std::to_string(depth) + ": A007317 term " + std::to_string(i);
      if (c[i] != catalan(i)) return "depth " + std::to_string(depth) + ": Catalan term " + std::to_string(i);
    }
  }
  return std::nullopt;
}

Outcome seq_max_formula(std::size_t nmax) {
  for (std::size_t n = 0; n + 1 <= nmax; ++n) {
    for (const Word& q : {Word{1, 2, 3, 3, 2}, Word{1, 2, 3, 2, 1}}) {
      const auto dist = max_distribution(enumerate_avoiders(n + 1, q), n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        if (BigInt(dist[k + 1]) != max_distribution_formula(n, k)) {
          return at_n(n + 1, word_text(q) + " avoiders with maximum " + std::to_string(k + 1));
        }
      }
    }
  }
  return std::nullopt;
}

struct CheckSpec {
  Scope scope;
  const char* name;
  Outcome (*run)(std::size_t);
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks{
      {Scope::Machine, "sort132-count-formula", machine_count},
      {Scope::Machine, "sort132-equals-av2314-mu", machine_characterization},
      {Scope::Machine, "class-theorem-s3", machine_class_theorem},
      {Scope::Machine, "stacksort-iff-av231", machine_stacksort},
      {Scope::Machine, "trace-conservation", machine_trace_conservation},
      {Scope::Machine, "prefix-closure", machine_prefix_closure},
      {Scope::Machine, "stack-shape", machine_stack_shape},
      {Scope::Machine, "ltr-minima-suffix-law", machine_suffix_law},
      {Scope::Machine, "sort123-double-partial-sums", machine_sort123},
      {Scope::Machine, "mesh-unshaded-is-classical", perm_mesh_empty_shading},
      {Scope::Machine, "mu-predicate-agrees", perm_mu_predicate},
      {Scope::Machine, "layered-characterization", perm_layered},
      {Scope::Grid, "generator-equals-brute-force", grid_generator},
      {Scope::Grid, "children-count", grid_children},
      {Scope::Grid, "unique-parent", grid_unique_parent},
      {Scope::Grid, "reconstruction", grid_reconstruction},
      {Scope::Grid, "cell-inversions-separated", grid_cell_inversions},
      {Scope::Grid, "hstrips-colayered", grid_hstrips},
      {Scope::Rgf, "partition-roundtrip", rgf_partition_roundtrip},
      {Scope::Rgf, "prefix-extension-lemma", rgf_prefix_lemma},
      {Scope::Rgf, "w-subword-characterization", rgf_w_subword},
      {Scope::Rgf, "active-sites-1221", rgf_active_sites},
      {Scope::Rgf, "stripped-word-and-alpha", rgf_lemma_321},
      {Scope::Rgf, "count-12321", rgf_count_12321},
      {Scope::Rgf, "wilf-class-table1", rgf_wilf_class},
      {Scope::Rgf, "catalan-1221-1212", rgf_catalan_patterns},
      {Scope::Rgf, "12231-2231-tilde231", rgf_equivalent_patterns},
      {Scope::Rgf, "pruned-equals-filter", rgf_pruned_enumeration},
      {Scope::Bijections, "phi-roundtrip", bij_phi},
      {Scope::Bijections, "psi-roundtrip-double-rises", bij_psi},
      {Scope::Bijections, "beta-both-modes", bij_beta},
      {Scope::Bijections, "beta-reduced", bij_beta_reduced},
      {Scope::Bijections, "av321-map", bij_av321},
      {Scope::Bijections, "gamma-roundtrip-max", bij_gamma},
      {Scope::Bijections, "ltr-minima-distribution", bij_minima_pipeline},
      {Scope::Sequences, "path-counts", seq_path_counts},
      {Scope::Sequences, "narayana-double-rises", seq_narayana},
      {Scope::Sequences, "dyck-generating-tree", seq_dyck_tree},
      {Scope::Sequences, "continued-fractions", seq_continued_fractions},
      {Scope::Sequences, "max-distribution-formula", seq_max_formula},
  };
  return checks;
}

bool in_scope(Scope wanted, Scope check) { return wanted == Scope::All || wanted == check; }

}  // namespace

const char* to_string(Scope scope) {
  switch (scope) {
    case Scope::All:
      return "all";
    case Scope::Machine:
      return "machine";
    case Scope::Grid:
      return "grid";
    case Scope::Rgf:
      return "rgf";
    case Scope::Bijections:
      return "bijections";
    case Scope::Sequences:
      return "sequences";
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  for (Scope s : {Scope::All, Scope::Machine, Scope::Grid, Scope::Rgf, Scope::Bijections,
                  Scope::Sequences}) {
    if (text == to_string(s)) return s;
  }
  throw InvalidInput("unknown scope '" + std::string(text) + "'");
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_check_names(Scope scope) {
  std::vector<std::string> names;
  for (const auto& check : registry()) {
    if (in_scope(scope, check.scope)) names.emplace_back(check.name);
  }
  return names;
}

VerifyReport run_verify_suite(Scope scope, std::size_t nmax) {
  require_within_cap(nmax, kDefaultPermutationCap, "verify");
  VerifyReport report{scope, nmax, {}};
  for (const auto& check : registry()) {
    if (!in_scope(scope, check.scope)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome failure;
    try {
      failure = check.run(nmax);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    report.checks.push_back(
        {check.scope, check.name, !failure.has_value(), failure.value_or(""), elapsed.count()});
  }
  return report;
}

}  // namespace patternsort
