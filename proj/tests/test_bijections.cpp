#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "patternsort/bijections.hpp"
#include "patternsort/error.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/sequences.hpp"
#include "patternsort/stats.hpp"

using namespace patternsort;

namespace {
using Word = std::vector<int>;
const Permutation kSigma{1, 3, 2};
const Permutation kFigure{13, 14, 15, 10, 12, 6, 7, 8, 11, 9, 3, 1, 4, 5, 2};
std::vector<int> vec(const Permutation& p) { return {p.begin(), p.end()}; }
std::vector<int> vec(const Rgf& r) { return {r.begin(), r.end()}; }

/// Strip index of every entry, computed from the ltr-minima alone.
Word oracle_phi(const Word& pi) {
  const Word minima = oracle::ltr_minima(pi);
  Word r;
  for (int v : pi) {
    int j = 1;
    while (minima[j - 1] > v) ++j;
    r.push_back(j);
  }
  return r;
}
}  // namespace

TEST_CASE("phi golden values") {
  CHECK(to_string(phi(kFigure)) == "111223332345445");
  CHECK(phi_inverse(parse_rgf("111223332345445")) == kFigure);
  CHECK(phi(Permutation{2, 1}) == parse_rgf("12"));
  CHECK(phi(Permutation::identity(5)) == parse_rgf("11111"));
  CHECK(phi_inverse(parse_rgf("12")) == Permutation{2, 1});
  CHECK_THROWS_AS(phi(Permutation{1, 3, 2}), InvalidInput);
  CHECK(phi(Permutation{1, 3, 2}, PhiMode::Relaxed) == parse_rgf("111"));
  CHECK_THROWS_AS(phi_inverse(parse_rgf("12231")), InvalidInput);
  CHECK(phi(Permutation{}) == Rgf{});
}

TEST_CASE("phi is a bijection onto R_n(12231) carrying minima to maximum") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<Rgf> images;
    for (const auto& pi : enumerate_sortable(n, kSigma)) {
      const Rgf r = phi(pi);
      CHECK(vec(r) == oracle_phi(vec(pi)));
      CHECK(phi_inverse(r) == pi);
      CHECK(static_cast<std::size_t>(r.max()) == count_ltr_minima(pi));
      images.insert(r);
    }
    const auto avoiders = enumerate_avoiders(n, Word{1, 2, 2, 3, 1});
    CHECK(std::vector<Rgf>(images.begin(), images.end()) == avoiders);
    for (const auto& r : avoiders) CHECK(phi(phi_inverse(r)) == r);
  }
}

TEST_CASE("psi examples and round trip") {
  CHECK(to_string(psi(Rgf{1})) == "UD");
  CHECK(to_string(psi(parse_rgf("12"))) == "UUDD");
  CHECK(to_string(psi(parse_rgf("11"))) == "UDUD");
  CHECK_THROWS_AS(psi(parse_rgf("1221")), InvalidInput);
  CHECK(psi(Rgf{}) == DyckPath{});
  CHECK(psi_inverse(DyckPath{}) == Rgf{});
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<DyckPath> images;
    std::vector<std::size_t> by_max(n + 1, 0);
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const DyckPath p = psi(r);
      CHECK(p.semilength() == n);
      CHECK(psi_inverse(p) == r);
      CHECK(static_cast<std::size_t>(r.max()) == 1 + double_rises(p));
      ++by_max[static_cast<std::size_t>(r.max())];
      images.insert(p);
    }
    CHECK(images.size() == oracle::catalan_table(n)[n]);
    for (std::size_t k = 1; k <= n; ++k) CHECK(narayana(n, k) == by_max[k]);
    for (const auto& p : enumerate_dyck(n)) CHECK(psi(psi_inverse(p)) == p);
  }
}

TEST_CASE("psi follows the generating trees") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 1})) {
      const auto sites = active_sites_1221(r);
      const auto kids = dyck_children(psi(r));
      std::set<DyckPath> expected(kids.begin(), kids.end());
      std::set<DyckPath> got;
      for (int j = sites.low; j <= sites.high; ++j) {
        Word w = vec(r);
        w.push_back(j);
        got.insert(psi(Rgf(w)));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("beta golden value and inverses") {
  const auto path = parse_labeled_motzkin("H0 H1 U U D H2 H0 D H0 H0");
  CHECK(to_string(beta(path, ContainerMode::Stack)) == "12134435367");
  CHECK(beta_inverse(parse_rgf("12134435367"), ContainerMode::Stack) == path);
  CHECK(beta(LabeledMotzkinPath{}, ContainerMode::Stack) == Rgf{1});
  CHECK(beta(LabeledMotzkinPath{}, ContainerMode::Queue) == Rgf{1});
  CHECK_THROWS_AS(beta_inverse(parse_rgf("12323"), ContainerMode::Stack), MalformedInput);
  CHECK_THROWS_AS(beta_inverse(parse_rgf("12332"), ContainerMode::Queue), MalformedInput);
  CHECK_THROWS_AS(beta_inverse(Rgf{}, ContainerMode::Queue), InvalidInput);
  BetaContainer stack(ContainerMode::Stack);
  CHECK_THROWS_AS(stack.take(), MalformedInput);
  stack.push(2);
  stack.push(3);
  CHECK(stack.accessible() == 3);
  BetaContainer queue(ContainerMode::Queue);
  queue.push(2);
  queue.push(3);
  CHECK(queue.take() == 2);
}

TEST_CASE("beta is a bijection in both modes with transported statistics") {
  for (auto [mode, avoided] : {std::pair{ContainerMode::Stack, Word{1, 2, 3, 2, 3}},
                               std::pair{ContainerMode::Queue, Word{1, 2, 3, 3, 2}}}) {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<Rgf> images;
      for (const auto& p : enumerate_labeled_motzkin(n)) {
        const Rgf r = beta(p, mode);
        CHECK(r.size() == n + 1);
        CHECK_FALSE(oracle::contains(vec(r), avoided));
        CHECK(beta_inverse(r, mode) == p);
        std::size_t ups = 0, zeros = 0, ones = 0;
        for (const auto& s : p.steps()) {
          ups += s.step == Step::U;
          zeros += s.step == Step::H && s.label == 0;
          ones += s.step == Step::H && s.label == 1;
        }
        std::map<int, int> occurrences;
        for (int v : r) ++occurrences[v];
        std::size_t singletons = 0;
        for (auto [v, c] : occurrences) singletons += v != 1 && c == 1;
        CHECK(ups + zeros == static_cast<std::size_t>(r.max() - 1));
        CHECK(ones == static_cast<std::size_t>(occurrences[1] - 1));
        CHECK(zeros == singletons);
        images.insert(r);
      }
      CHECK(std::vector<Rgf>(images.begin(), images.end()) == enumerate_avoiders(n + 1, avoided));
    }
  }
}

TEST_CASE("reduced beta") {
  const auto p = parse_labeled_motzkin("U H2 D H0");
  CHECK(beta_reduced(p, ContainerMode::Stack) == parse_rgf("1112"));
  CHECK(beta_reduced_inverse(parse_rgf("1112"), ContainerMode::Stack) == p);
  CHECK_THROWS_AS(beta_reduced(parse_labeled_motzkin("H1"), ContainerMode::Stack), InvalidInput);
  for (auto [mode, avoided] : {std::pair{ContainerMode::Stack, Word{1, 2, 1, 2}},
                               std::pair{ContainerMode::Queue, Word{1, 2, 2, 1}}}) {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<Rgf> images;
      for (const auto& path : enumerate_labeled_motzkin(n)) {
        const auto& st = path.steps();
        if (std::any_of(st.begin(), st.end(),
                        [](const LabeledStep& s) { return s.step == Step::H && s.label == 1; })) {
          continue;
        }
        const Rgf r = beta_reduced(path, mode);
        CHECK(beta_reduced_inverse(r, mode) == path);
        images.insert(r);
      }
      CHECK(std::vector<Rgf>(images.begin(), images.end()) == enumerate_avoiders(n, avoided));
    }
  }
}

TEST_CASE("map to Av(321)") {
  CHECK(nr_to_av321(parse_rgf("121314234")) == Permutation{3, 5, 1, 7, 2, 9, 4, 6, 8});
  CHECK(av321_to_nr(Permutation{3, 5, 1, 7, 2, 9, 4, 6, 8}) == parse_rgf("121314234"));
  CHECK(nr_to_av321(Rgf{1}) == Permutation{1});
  try {
    nr_to_av321(parse_rgf("12321"));
    FAIL("accepted a decreasing stripped word");
  } catch (const InvalidAt& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(av321_to_nr(Permutation{3, 2, 1}), InvalidInput);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<Permutation> images;
    std::size_t literal = 0;
    for (const auto& r : enumerate_rgfs(n)) {
      const bool literal_domain = repeated_ltr_maxima(r).empty() && !rgf_contains(r, {1, 2, 3, 2, 1});
      literal += literal_domain;
      if (!is_weakly_increasing(strip_ltr_maxima(r))) {
        CHECK_FALSE(literal_domain);
        continue;
      }
      const Permutation pi = nr_to_av321(r);
      CHECK_FALSE(oracle::contains(vec(pi), {3, 2, 1}));
      CHECK(av321_to_nr(pi) == r);
      CHECK(ltr_extrema(pi).maxima.size() == static_cast<std::size_t>(r.max()));
      images.insert(pi);
    }
    std::size_t av = 0;
    for (const auto& p : oracle::permutations(n)) av += !oracle::contains(p, {3, 2, 1});
    CHECK(images.size() == av);
    CHECK(av == oracle::catalan_table(n)[n]);
    if (n >= 1) CHECK(literal == oracle::catalan_table(n - 1)[n - 1]);
  }
}

TEST_CASE("rm and lm occurrences") {
  CHECK(rm_321(parse_rgf("12321").letters()) == TripleIndex{{3, 4, 5}});
  CHECK(rm_321(parse_rgf("1123").letters()).is_zero());
  CHECK(lm_tilde231(parse_rgf("12231").letters()) == TripleIndex{{3, 4, 5}});
  CHECK(lm_tilde231(parse_rgf("12321").letters()) == TripleIndex{{6, 6, 6}});
  CHECK(to_string(TripleIndex{{3, 4, 5}}) == "(3,4,5)");
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& r : enumerate_rgfs(n)) {
      std::vector<std::size_t> hit = oracle::first_occurrence(vec(r), {3, 2, 1});
      CHECK(rm_321(r.letters()).is_zero() == hit.empty());
    }
  }
}

TEST_CASE("gamma") {
  CHECK(gamma(parse_rgf("12321")) == parse_rgf("12231"));
  CHECK(gamma_inverse(parse_rgf("12231")) == parse_rgf("12321"));
  CHECK(gamma(parse_rgf("1221")) == parse_rgf("1221"));
  const auto steps = gamma_steps(parse_rgf("12321"));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].swapped == TripleIndex{{3, 4, 5}});
  CHECK_THROWS_AS(gamma(parse_rgf("12231")), InvalidInput);
  CHECK_THROWS_AS(gamma_inverse(parse_rgf("12321")), InvalidInput);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<Rgf> images;
    for (const auto& r : enumerate_avoiders(n, Word{1, 2, 2, 3, 1})) {
      TripleIndex previous{{n + 1, n + 1, n + 1}};
      for (const auto& s : gamma_steps(r)) {
        CHECK(s.swapped < previous);
        previous = s.swapped;
      }
      const Rgf g = gamma(r);
      Word a = vec(r), b = vec(g);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      CHECK_FALSE(oracle::contains(vec(g), {1, 2, 3, 2, 1}));
      CHECK(gamma_inverse(g) == r);
      images.insert(g);
    }
    CHECK(std::vector<Rgf>(images.begin(), images.end()) ==
          enumerate_avoiders(n, Word{1, 2, 3, 2, 1}));
  }
}

TEST_CASE("ltr-minima distribution through gamma and phi") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<std::size_t> by_minima(n + 2, 0);
    for (const auto& pi : enumerate_sortable(n + 1, kSigma)) {
      const Rgf r = gamma(phi(pi));
      CHECK(static_cast<std::size_t>(r.max()) == count_ltr_minima(pi));
      ++by_minima[count_ltr_minima(pi)];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      std::uint64_t formula = 0;
      for (std::size_t j = k; j <= n; ++j) {
        if (k == 0 && j == 0) {
          formula += 1;
        } else if (k >= 1) {
          formula += oracle::binom(n, j) * oracle::binom(j, k) * oracle::binom(j, k - 1) / j;
        }
      }
      CHECK(by_minima[k + 1] == formula);
      CHECK(max_distribution_formula(n, k) == formula);
    }
  }
}
