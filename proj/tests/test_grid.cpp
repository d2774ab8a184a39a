#include "doctest.h"
#include "oracles.hpp"
#include "patternsort/error.hpp"
#include "patternsort/grid.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/stats.hpp"

using namespace patternsort;

namespace {
const Permutation kSigma{1, 3, 2};
const Permutation kFigure{13, 14, 15, 10, 12, 6, 7, 8, 11, 9, 3, 1, 4, 5, 2};
std::vector<int> vec(const Permutation& p) { return {p.begin(), p.end()}; }
}  // namespace

TEST_CASE("decomposition of the worked example") {
  const GridDecomposition g = decompose(kFigure);
  CHECK(g.minima == std::vector<int>{13, 10, 6, 3, 1});
  CHECK(standardize(g.cell(3, 3)) == Permutation{1, 2, 3});
  CHECK(standardize(g.hstrip(2)) == Permutation{2, 1});
  CHECK(standardize(g.core) == Permutation{9, 10, 8, 4, 5, 7, 6, 2, 3, 1});
  CHECK(g.block(1) == std::vector<int>{14, 15});
  CHECK(g.cell(1, 1) == std::vector<int>{14, 15});
  CHECK(g.cell(2, 2) == std::vector<int>{12});
  CHECK(g.cell(2, 3) == std::vector<int>{11});
  CHECK(g.cell(4, 5) == std::vector<int>{4, 5});
  CHECK(g.cell(5, 5) == std::vector<int>{2});
  CHECK(g.strip_of_value(13) == 1);
  CHECK(g.strip_of_value(12) == 2);
  CHECK(reconstruct(g) == kFigure);
  CHECK(structural_check(kFigure).passed());
}

TEST_CASE("trivial decompositions") {
  const GridDecomposition one = decompose(Permutation{1});
  CHECK(one.minima == std::vector<int>{1});
  CHECK(one.core.empty());
  const GridDecomposition dec = decompose(Permutation::decreasing(5));
  CHECK(dec.strips() == 5);
  for (const auto& b : dec.blocks) CHECK(b.empty());
  CHECK_THROWS_AS(decompose(Permutation{}), InvalidInput);
}

TEST_CASE("decomposition invariants") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const GridDecomposition g = decompose(pi);
      CHECK(g.minima == oracle::ltr_minima(vec(pi)));
      CHECK(g.minima.back() == 1);
      CHECK(reconstruct(g) == pi);
      for (std::size_t i = 1; i <= g.strips(); ++i) {
        for (std::size_t j = 1; j < i; ++j) CHECK(g.cell(i, j).empty());
      }
    }
  }
}

TEST_CASE("structural check") {
  const auto fail = structural_check(Permutation{2, 3, 1, 4});
  CHECK_FALSE(fail.passed());
  CHECK(structural_check(Permutation{1, 3, 2}).passed());
  CHECK_FALSE(is_sigma_sortable(Permutation{1, 3, 2}, kSigma));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& pi : enumerate_sortable(n, kSigma)) CHECK(structural_check(pi).passed());
  }
}

TEST_CASE("active cells") {
  CHECK(active_cells(Permutation{1}) == std::vector<std::size_t>{1});
  CHECK(active_cells(Permutation{1, 2}) == std::vector<std::size_t>{1});
  CHECK(active_cells(Permutation{2, 1}) == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(active_cells(Permutation{1, 3, 2}), InvalidInput);
}

TEST_CASE("insertions") {
  CHECK(*insert(Permutation{1, 2}, {InsertionKind::Cons, 1}).permutation == Permutation{1, 2, 3});
  const auto illegal = insert(Permutation{1, 2}, {InsertionKind::Min, 1});
  CHECK_FALSE(illegal.accepted());
  CHECK(illegal.rejection == Rejection::IllegalOp);
  CHECK(std::string(to_string(illegal.rejection)) == "illegal-op");
  CHECK(*insert(Permutation{1}, {InsertionKind::NewMinimum, 0}).permutation == Permutation{2, 1});
  const auto empty = insert(Permutation{2, 1}, {InsertionKind::Cons, 1});
  CHECK(empty.rejection == Rejection::EmptyCell);
  CHECK(active_cells(Permutation{4, 2, 3, 1}) == std::vector<std::size_t>{2, 3});
  const auto inactive = insert(Permutation{4, 2, 3, 1}, {InsertionKind::Min, 1});
  CHECK(inactive.rejection == Rejection::Inactive);
  CHECK_THROWS_AS(insert(Permutation{1, 2}, {InsertionKind::Min, 3}), InvalidInput);
  CHECK_THROWS_AS(insert(Permutation{1, 3, 2}, {InsertionKind::NewMinimum, 0}), InvalidInput);
}

TEST_CASE("every legal insertion is sortable, every illegal one is not") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_sortable(n, kSigma)) {
      const auto active = active_cells(pi);
      for (std::size_t i = 1; i <= decompose(pi).strips(); ++i) {
        const bool is_active = std::find(active.begin(), active.end(), i) != active.end();
        for (InsertionKind kind : {InsertionKind::Min, InsertionKind::Cons}) {
          const auto res = insert(pi, {kind, i});
          if (res.accepted()) {
            CHECK(is_active);
            CHECK(oracle::sortable(vec(*res.permutation), {1, 3, 2}));
          } else if (res.rejection == Rejection::IllegalOp) {
            const Permutation raw = append_between(
                pi, kind == InsertionKind::Min ? decompose(pi).minima[i - 1]
                                               : decompose(pi).cell(i, decompose(pi).strips()).back());
            CHECK_FALSE(oracle::sortable(vec(raw), {1, 3, 2}));
          }
        }
      }
    }
  }
}

TEST_CASE("generator equals brute force") {
  const std::vector<std::size_t> counts{1, 1, 2, 5, 15, 51, 188, 731, 2950};
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto generated = generate_sortable(n);
    CHECK(generated.size() == counts[n]);
    CHECK(generated == enumerate_sortable(n, kSigma));
    CHECK(generated == generate_sortable_serial(n));
  }
  CHECK_THROWS_AS(generate_sortable(11), ResourceLimit);
}

TEST_CASE("children count is active cells plus one") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& pi : enumerate_sortable(n, kSigma)) {
      const auto children = sortable_children(pi);
      CHECK(children.size() == active_cells(pi).size() + 1);
      CHECK(children.front() == append_between(pi, 0));
    }
  }
  const auto hist = active_cell_histogram(enumerate_sortable(3, kSigma));
  std::size_t total = 0;
  for (auto [t, count] : hist) total += (t + 1) * count;
  CHECK(total == 15);
}

TEST_CASE("inversions inside a cell are separated by a smaller element") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& pi : enumerate_sortable(n, kSigma)) {
      const GridDecomposition g = decompose(pi);
      for (std::size_t i = 1; i <= g.strips(); ++i) {
        for (std::size_t j = i; j <= g.strips(); ++j) {
          const auto& c = g.cell(i, j);
          for (std::size_t a = 0; a < c.size(); ++a) {
            for (std::size_t b = a + 1; b < c.size(); ++b) {
              if (c[a] < c[b]) continue;
              const auto pa = std::find(pi.begin(), pi.end(), c[a]);
              const auto pb = std::find(pi.begin(), pi.end(), c[b]);
              CHECK(std::any_of(pa, pb, [&](int z) { return z < g.minima[i - 1]; }));
            }
          }
        }
      }
      for (const auto& h : g.hstrips) {
        if (!h.empty()) CHECK(is_colayered(standardize(h)));
      }
    }
  }
}

TEST_CASE("minima distribution and rendering") {
  CHECK(minima_distribution(3) == std::vector<std::size_t>{0, 1, 3, 1});
  const std::string text = render_grid(decompose(kFigure));
  CHECK(text.find("minima: 13 10 6 3 1") == 0);
  CHECK(text.find("7 8 9") != std::string::npos);
}
