#include "patternsort/grid.hpp"

#include <algorithm>
#include <sstream>

#include "patternsort/error.hpp"
#include "patternsort/parallel.hpp"
#include "patternsort/pattern.hpp"
#include "patternsort/stats.hpp"

namespace patternsort {

namespace {

const Permutation& sigma_132() {
  static const Permutation p{1, 3, 2};
  return p;
}

bool is_increasing(const std::vector<int>& seq) {
  return std::adjacent_find(seq.begin(), seq.end(), std::greater_equal<>()) == seq.end();
}

std::string describe_cell(std::size_t i, std::size_t j) {
  return "C_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

std::size_t GridDecomposition::strip_of_value(int v) const {
  for (std::size_t i = 0; i < minima.size(); ++i) {
    if (minima[i] <= v) return i + 1;
  }
  throw InvalidInput("value " + std::to_string(v) + " lies below every ltr-minimum");
}

GridDecomposition decompose(const Permutation& pi) {
  require(!pi.empty(), "decompose: empty permutation");
  GridDecomposition grid;
  for (std::size_t pos = 0; pos < pi.size(); ++pos) {
    if (grid.minima.empty() || pi[pos] < grid.minima.back()) {
      grid.minima.push_back(pi[pos]);
      grid.minima_positions.push_back(pos + 1);
    }
  }
  const std::size_t k = grid.strips();
  grid.blocks.assign(k, {});
  grid.hstrips.assign(k, {});
  grid.cells.assign(k, std::vector<std::vector<int>>(k));
  std::size_t block = 0;
  for (std::size_t pos = 0; pos < pi.size(); ++pos) {
    if (block < k && grid.minima_positions[block] == pos + 1) {
      ++block;
      continue;
    }
    const int x = pi[pos];
    const std::size_t strip = grid.strip_of_value(x);
    grid.blocks[block - 1].push_back(x);
    grid.hstrips[strip - 1].push_back(x);
    grid.cells[strip - 1][block - 1].push_back(x);
    grid.core.push_back(x);
  }
  return grid;
}

Permutation reconstruct(const GridDecomposition& grid) {
  std::vector<int> v;
  for (std::size_t j = 0; j < grid.strips(); ++j) {
    v.push_back(grid.minima[j]);
    v.insert(v.end(), grid.blocks[j].begin(), grid.blocks[j].end());
  }
  return Permutation(std::move(v));
}

std::string render_grid(const GridDecomposition& grid) {
  const std::size_t k = grid.strips();
  std::vector<std::vector<std::string>> text(k, std::vector<std::string>(k));
  std::vector<std::size_t> width(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    width[j] = ("B" + std::to_string(j + 1)).size();
    for (std::size_t i = 0; i < k; ++i) {
      if (i > j) continue;
      const auto& c = grid.cells[i][j];
      text[i][j] = c.empty() ? "." : to_string(c);
      width[j] = std::max(width[j], text[i][j].size());
    }
  }
  const std::size_t label_width = 2 + std::to_string(k).size();
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  std::ostringstream out;
  out << "minima: " << to_string(grid.minima) << '\n';
  out << std::string(label_width, ' ');
  for (std::size_t j = 0; j < k; ++j) out << "| " << pad("B" + std::to_string(j + 1), width[j]) << ' ';
  out << '\n';
  for (std::size_t i = 0; i < k; ++i) {
    out << pad("H" + std::to_string(i + 1), label_width);
    for (std::size_t j = 0; j < k; ++j) out << "| " << pad(text[i][j], width[j]) << ' ';
    out << "  (m_" << i + 1 << " = " << grid.minima[i] << ")\n";
  }
  return out.str();
}

bool StructuralReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const StructuralCondition& c) { return c.holds; });
}

StructuralReport structural_check(const Permutation& pi) {
  StructuralReport report;
  if (pi.empty()) {
    report.conditions.push_back({"nonempty", true, "empty permutation"});
    return report;
  }
  const GridDecomposition grid = decompose(pi);
  const std::size_t k = grid.strips();
  const Permutation p132{1, 3, 2}, p213{2, 1, 3};

  StructuralCondition no_switch{"no nonempty cell up-right of a nonempty cell", true, ""};
  for (std::size_t i = 1; i <= k && no_switch.holds; ++i) {
    for (std::size_t j = 1; j <= k && no_switch.holds; ++j) {
      if (grid.cell(i, j).empty()) continue;
      for (std::size_t u = 1; u < i && no_switch.holds; ++u) {
        for (std::size_t v = j + 1; v <= k && no_switch.holds; ++v) {
          if (!grid.cell(u, v).empty()) {
            no_switch.holds = false;
            no_switch.detail = describe_cell(i, j) + " and " + describe_cell(u, v) + " both nonempty";
          }
        }
      }
    }
  }
  report.conditions.push_back(no_switch);

  StructuralCondition cells{"every cell avoids 132 and 213", true, ""};
  for (std::size_t i = 1; i <= k && cells.holds; ++i) {
    for (std::size_t j = i; j <= k && cells.holds; ++j) {
      const auto& c = grid.cell(i, j);
      if (contains(c, p132.values()) || contains(c, p213.values())) {
        cells.holds = false;
        cells.detail = describe_cell(i, j) + " = " + to_string(c);
      }
    }
  }
  report.conditions.push_back(cells);

  StructuralCondition strips{"every horizontal strip avoids 132 and 213", true, ""};
  for (std::size_t i = 1; i <= k && strips.holds; ++i) {
    const auto& h = grid.hstrip(i);
    if (contains(h, p132.values()) || contains(h, p213.values())) {
      strips.holds = false;
      strips.detail = "H_" + std::to_string(i) + " = " + to_string(h);
    }
  }
  report.conditions.push_back(strips);

  StructuralCondition core{"core avoids 213", !contains(grid.core, p213.values()), ""};
  if (!core.holds) core.detail = "core = " + to_string(grid.core);
  report.conditions.push_back(core);

  StructuralCondition blocks{"earlier blocks lie above later blocks", true, ""};
  for (std::size_t a = 0; a < k && blocks.holds; ++a) {
    for (std::size_t b = a + 1; b < k && blocks.holds; ++b) {
      for (int x : grid.blocks[a]) {
        for (int y : grid.blocks[b]) {
          if (x < y && blocks.holds) {
            blocks.holds = false;
            blocks.detail = std::to_string(x) + " in B_" + std::to_string(a + 1) + " < " +
                            std::to_string(y) + " in B_" + std::to_string(b + 1);
          }
        }
      }
    }
  }
  report.conditions.push_back(blocks);
  return report;
}

namespace {

bool cell_is_active(const GridDecomposition& grid, std::size_t i) {
  const std::size_t k = grid.strips();
  for (std::size_t u = i + 1; u <= k; ++u) {
    for (std::size_t v = 1; v < k; ++v) {
      if (!grid.cell(u, v).empty()) return false;
    }
  }
  std::vector<int> below;
  for (int x : grid.block(k)) {
    if (grid.strip_of_value(x) > i) below.push_back(x);
  }
  return is_increasing(below);
}

std::vector<std::size_t> active_cells_of(const GridDecomposition& grid) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= grid.strips(); ++i) {
    if (cell_is_active(grid, i)) out.push_back(i);
  }
  return out;
}

void require_sortable(const Permutation& pi, const char* what) {
  require(is_sigma_sortable(pi, sigma_132()),
          std::string(what) + ": " + to_string(pi) + " is not 132-sortable");
}

}  // namespace

std::vector<std::size_t> active_cells(const Permutation& pi) {
  require_sortable(pi, "active_cells");
  return active_cells_of(decompose(pi));
}

const char* to_string(Rejection rejection) {
  switch (rejection) {
    case Rejection::None: return "none";
    case Rejection::Inactive: return "inactive";
    case Rejection::IllegalOp: return "illegal-op";
    case Rejection::EmptyCell: return "empty-cell";
  }
  return "unknown";
}

InsertionKind legal_kind(const Permutation& pi, const GridDecomposition& grid, std::size_t cell) {
  const std::size_t k = grid.strips();
  const auto& c = grid.cell(cell, k);
  if (c.empty()) return InsertionKind::Min;
  const std::size_t last_strip = grid.strip_of_value(pi[pi.size() - 1]);
  return last_strip > cell ? InsertionKind::Min : InsertionKind::Cons;
}

InsertionResult insert_into_sortable(const Permutation& pi, Insertion op) {
  if (op.kind == InsertionKind::NewMinimum) return {append_between(pi, 0), Rejection::None};
  require(!pi.empty(), "insert: cell insertion into the empty permutation");
  const GridDecomposition grid = decompose(pi);
  const std::size_t k = grid.strips();
  require(op.cell >= 1 && op.cell <= k,
          "insert: cell " + std::to_string(op.cell) + " outside 1.." + std::to_string(k));
  if (!cell_is_active(grid, op.cell)) return {std::nullopt, Rejection::Inactive};
  const auto& c = grid.cell(op.cell, k);
  if (op.kind == InsertionKind::Cons && c.empty()) return {std::nullopt, Rejection::EmptyCell};
  if (legal_kind(pi, grid, op.cell) != op.kind) return {std::nullopt, Rejection::IllegalOp};
  const int anchor = op.kind == InsertionKind::Min ? grid.minima[op.cell - 1] : c.back();
  return {append_between(pi, anchor), Rejection::None};
}

InsertionResult insert(const Permutation& pi, Insertion op) {
  require_sortable(pi, "insert");
  return insert_into_sortable(pi, op);
}

std::vector<Permutation> sortable_children(const Permutation& pi) {
  std::vector<Permutation> out;
  out.push_back(append_between(pi, 0));
  if (pi.empty()) return out;
  const GridDecomposition grid = decompose(pi);
  const std::size_t k = grid.strips();
  for (std::size_t i : active_cells_of(grid)) {
    const auto& c = grid.cell(i, k);
    const int anchor =
        legal_kind(pi, grid, i) == InsertionKind::Min ? grid.minima[i - 1] : c.back();
    out.push_back(append_between(pi, anchor));
  }
  return out;
}

namespace {

template <class Collect>
std::vector<Permutation> grow(std::size_t n, std::size_t cap, Collect&& collect) {
  require_within_cap(n, cap, "generate_sortable");
  std::vector<Permutation> level{Permutation{}};
  for (std::size_t m = 1; m <= n; ++m) {
    level = collect(level.size(), [&](std::size_t i) { return sortable_children(level[i]); });
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

std::vector<Permutation> generate_sortable(std::size_t n, std::size_t cap) {
  return grow(n, cap, [](std::size_t tasks, auto&& task) {
    return parallel_collect<Permutation>(tasks, task);
  });
}

std::vector<Permutation> generate_sortable_serial(std::size_t n, std::size_t cap) {
  return grow(n, cap, [](std::size_t tasks, auto&& task) {
    return serial_collect<Permutation>(tasks, task);
  });
}

std::map<std::size_t, std::size_t> active_cell_histogram(const std::vector<Permutation>& level) {
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& pi : level) {
    ++histogram[pi.empty() ? 0 : active_cells_of(decompose(pi)).size()];
  }
  return histogram;
}

std::vector<std::size_t> minima_distribution(std::size_t n, std::size_t cap) {
  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& pi : generate_sortable(n, cap)) ++counts[count_ltr_minima(pi)];
  return counts;
}

}  // namespace patternsort
