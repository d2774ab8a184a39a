// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Exhaustive sets are compared against the brute-force oracles in oracles.hpp.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "patternsort/bijections.hpp"
#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/paths.hpp"
#include "patternsort/pattern.hpp"
#include "patternsort/rgf.hpp"
#include "patternsort/sequences.hpp"
#include "patternsort/stats.hpp"

using namespace patternsort;

namespace {

using Word = std::vector<int>;
using Outcome = std::optional<std::string>;  // empty on success, otherwise the first mismatch

const Permutation kSigma{1, 3, 2};
const std::set<std::pair<int, int>> kMuShading{{0, 2}, {2, 0}, {2, 1}};

Word vec(const Permutation& p) { return {p.begin(), p.end()}; }

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

std::set<Word> as_words(const std::vector<Permutation>& perms) {
  std::set<Word> out;
  for (const auto& p : perms) out.insert(vec(p));
  return out;
}

Outcome machine_counts() {
  const std::vector<std::size_t> listed{1, 2, 5, 15, 51, 188, 731, 2950};
  const auto cat = oracle::catalan_table(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t brute = 0;
    for (const auto& p : oracle::permutations(n)) brute += oracle::sortable(p, {1, 3, 2});
    std::uint64_t formula = 0;
    for (std::size_t k = 0; k < n; ++k) formula += oracle::binom(n - 1, k) * cat[k];
    const std::size_t library = enumerate_sortable(n, kSigma).size();
    if (brute != formula || brute != listed[n - 1] || library != brute) {
      return describe("n=", n, " brute=", brute, " formula=", formula, " library=", library);
    }
  }
  return {};
}

Outcome characterization() {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<Word> avoiders;
    for (const auto& p : oracle::permutations(n)) {
      if (!oracle::contains(p, {2, 3, 1, 4}) && !oracle::contains_mesh(p, {1, 3, 2}, kMuShading)) {
        avoiders.insert(p);
      }
    }
    if (as_words(enumerate_sortable(n, kSigma)) != avoiders) return describe("n=", n);
  }
  return {};
}

Outcome class_theorem() {
  for (const auto& sigma : all_permutations(3)) {
    if (!contains(sigma_hat(sigma).values(), Word{2, 3, 1})) continue;
    const Word reversed = vec(sigma.reversed());
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& p : oracle::permutations(n)) {
        const bool in_class = !oracle::contains(p, {1, 3, 2}) && !oracle::contains(p, reversed);
        if (oracle::sortable(p, vec(sigma)) != in_class) {
          return describe("sigma=", to_string(sigma), " pi=", to_string(Permutation(p)));
        }
      }
    }
  }
  if (!oracle::sortable({2, 4, 1, 3}, {1, 3, 2}) || oracle::sortable({1, 3, 2}, {1, 3, 2})) {
    return std::string("witness pair (2413, 132) does not show non-class behaviour");
  }
  return {};
}

Outcome generator_equivalence() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto generated = generate_sortable(n);
    if (as_words(generated) != as_words(enumerate_sortable(n, kSigma))) return describe("n=", n);
    if (n == 8) break;
    for (const auto& pi : generated) {
      const std::size_t children = sortable_children(pi).size();
      const std::size_t active = active_cells(pi).size();
      if (children != active + 1) {
        return describe("parent ", to_string(pi), " has ", children, " children and ", active,
                        " active cells");
      }
    }
  }
  return {};
}

Outcome round_trips() {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<Rgf> phi_images;
    for (const auto& pi : enumerate_sortable(n, kSigma)) {
      const Rgf r = phi(pi);
      if (phi_inverse(r) != pi) return describe("phi at ", to_string(pi));
      phi_images.insert(r);
    }
    std::set<Rgf> oracle_avoiders;
    for (const auto& w : oracle::rgfs(n)) {
      if (!oracle::contains(w, {1, 2, 2, 3, 1})) oracle_avoiders.insert(Rgf(w));
    }
    if (phi_images != oracle_avoiders) return describe("phi image at n=", n);
    for (const auto& r : oracle_avoiders) {
      if (phi(phi_inverse(r)) != r) return describe("phi-inverse at ", to_string(r));
    }

    std::set<Word> av321;
    for (const auto& p : oracle::permutations(n)) {
      if (!oracle::contains(p, {3, 2, 1})) av321.insert(p);
    }
    std::set<Word> nr_images;
    for (const auto& r : enumerate_rgfs(n)) {
      if (!is_weakly_increasing(strip_ltr_maxima(r))) continue;
      const Permutation pi = nr_to_av321(r);
      if (av321_to_nr(pi) != r) return describe("av321 map at ", to_string(r));
      nr_images.insert(vec(pi));
    }
    if (nr_images != av321) return describe("av321 image at n=", n);

    std::set<Rgf> gamma_images;
    for (const auto& r : oracle_avoiders) {
      const Rgf g = gamma(r);
      if (gamma_inverse(g) != r) return describe("gamma at ", to_string(r));
      gamma_images.insert(g);
    }
    std::set<Rgf> avoid12321;
    for (const auto& w : oracle::rgfs(n)) {
      if (!oracle::contains(w, {1, 2, 3, 2, 1})) avoid12321.insert(Rgf(w));
    }
    if (gamma_images != avoid12321) return describe("gamma image at n=", n);
  }

  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<std::string> dyck;
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const DyckPath p = psi(r);
      if (psi_inverse(p) != r) return describe("psi at ", to_string(r));
      dyck.insert(to_string(p));
    }
    const auto words = oracle::dyck_words(n);
    if (dyck != std::set<std::string>(words.begin(), words.end())) return describe("psi image at n=", n);
  }

  for (auto [mode, avoided] : {std::pair{ContainerMode::Stack, Word{1, 2, 3, 2, 3}},
                               std::pair{ContainerMode::Queue, Word{1, 2, 3, 3, 2}}}) {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<Rgf> images;
      for (const auto& p : enumerate_labeled_motzkin(n)) {
        const Rgf r = beta(p, mode);
        if (beta_inverse(r, mode) != p) return describe("beta at ", to_string(p));
        images.insert(r);
      }
      std::set<Rgf> expected;
      for (const auto& w : oracle::rgfs(n + 1)) {
        if (!oracle::contains(w, avoided)) expected.insert(Rgf(w));
      }
      if (images != expected) return describe("beta image at length ", n);
    }
  }
  return {};
}

Outcome statistic_transport() {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::size_t> by_max(n + 1, 0);
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const DyckPath p = psi(r);
      if (static_cast<std::size_t>(r.max()) != 1 + double_rises(p)) return describe("psi at ", to_string(r));
      ++by_max[static_cast<std::size_t>(r.max())];
    }
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t nar = oracle::binom(n, k) * oracle::binom(n, k - 1) / n;
      if (by_max[k] != nar) return describe("Narayana n=", n, " k=", k);
    }
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 3, 1})) {
      if (gamma(r).max() != r.max()) return describe("gamma changes the maximum of ", to_string(r));
    }
  }
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<std::uint64_t> by_minima(n + 2, 0);
    for (const auto& p : oracle::permutations(n + 1)) {
      if (oracle::sortable(p, {1, 3, 2})) ++by_minima[oracle::ltr_minima(p).size()];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t formula = k == 0 ? 1 : 0;
      for (std::size_t j = std::max<std::size_t>(k, 1); k >= 1 && j <= n; ++j) {
        formula += oracle::binom(n, j) * (oracle::binom(j, k) * oracle::binom(j, k - 1) / j);
      }
      if (by_minima[k + 1] != formula || max_distribution_formula(n, k) != formula) {
        return describe("ltr-minima n=", n, " k=", k, " count=", by_minima[k + 1], " formula=", formula);
      }
    }
  }
  return {};
}

Outcome wilf_class() {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto words = oracle::rgfs(n);
    std::optional<std::size_t> shared;
    for (const auto& pattern : wilf_class_patterns()) {
      const Word q(pattern.begin(), pattern.end());
      std::size_t count = 0;
      for (const auto& w : words) count += !oracle::contains(w, q);
      if (enumerate_avoiders(n, q).size() != count) return describe("library count for ", to_compact_string(q));
      if (shared && *shared != count) return describe("n=", n, " pattern ", to_compact_string(q));
      shared = count;
    }
  }
  const auto cat = oracle::catalan_table(9);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (const Word& q : {Word{1, 2, 2, 1}, Word{1, 2, 1, 2}}) {
      if (enumerate_avoiders(n, q).size() != cat[n]) return describe("n=", n, " ", to_compact_string(q));
    }
  }
  return {};
}

Outcome continued_fractions() {
  const auto a = cf_series(10, CfVariant::A007317, 9);
  const auto c = cf_series(10, CfVariant::Catalan, 9);
  const auto cat = oracle::catalan_table(8);
  for (std::size_t i = 0; i <= 8; ++i) {
    if (a[i] != oracle::binomial_transform_catalan(i + 1) || a[i] != a007317(i + 1)) {
      return describe("A007317 coefficient ", i, " = ", a[i]);
    }
    if (c[i] != cat[i] || c[i] != catalan(i)) return describe("Catalan coefficient ", i, " = ", c[i]);
  }
  return {};
}

Outcome golden_examples() {
  const Permutation figure{13, 14, 15, 10, 12, 6, 7, 8, 11, 9, 3, 1, 4, 5, 2};
  if (to_string(phi(figure)) != "111223332345445") return describe("phi gives ", to_string(phi(figure)));
  const Rgf b = beta(parse_labeled_motzkin("H0 H1 U U D H2 H0 D H0 H0"), ContainerMode::Stack);
  if (to_string(b) != "12134435367") return describe("beta gives ", to_string(b));
  const Permutation m = nr_to_av321(parse_rgf("121314234"));
  if (to_string(m) != "3 5 1 7 2 9 4 6 8") return describe("map gives ", to_string(m));
  return {};
}

Outcome cross_pattern() {
  BigInt partial = 0, twice = 1;
  for (std::size_t n = 1; n <= 8; ++n) {
    if (n >= 2) {
      partial += catalan(n - 1);
      twice += partial;
    }
    std::size_t brute = 0;
    for (const auto& p : oracle::permutations(n)) brute += oracle::sortable(p, {1, 2, 3});
    if (BigInt(brute) != twice || enumerate_sortable(n, Permutation{1, 2, 3}).size() != brute) {
      return describe("n=", n, " brute=", brute, " reference=", twice);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"machine counts", machine_counts},
      {"Sort(132) = Av(2314, mu) for n <= 9", characterization},
      {"class theorem for sigma in S3", class_theorem},
      {"generator equals machine enumeration", generator_equivalence},
      {"bijection round trips", round_trips},
      {"statistic transport", statistic_transport},
      {"Wilf class and Catalan avoiders", wilf_class},
      {"continued fractions", continued_fractions},
      {"golden examples", golden_examples},
      {"Sort(123) counts", cross_pattern},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = describe("exception: ", e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.has_value();
    std::cout << (outcome ? "FAIL" : "PASS") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (outcome) std::cout << ": " << *outcome;
    std::cout << " (" << std::fixed << std::setprecision(2) << seconds << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
