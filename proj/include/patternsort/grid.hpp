#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "patternsort/machine.hpp"
#include "patternsort/permutation.hpp"

namespace patternsort {

/// Grid decomposition of pi = m_1 B_1 m_2 B_2 ... m_k B_k by its ltr-minima.
/// Strip and cell indices are 1-based as in the usual drawing: H_i is the value band
/// (m_i, m_{i-1}) with m_0 = +infinity, B_j the j-th vertical strip, C_{i,j} = H_i n B_j.
/// Every sequence keeps the raw values of pi in position order.
struct GridDecomposition {
  std::vector<int> minima;                    ///< m_1 > m_2 > ... > m_k = 1
  std::vector<std::size_t> minima_positions;  ///< 1-based
  std::vector<std::vector<int>> blocks;       ///< B_1 .. B_k
  std::vector<std::vector<int>> hstrips;      ///< H_1 .. H_k
  std::vector<std::vector<std::vector<int>>> cells;  ///< cells[i-1][j-1] = C_{i,j}
  std::vector<int> core;                      ///< B_1 B_2 ... B_k

  std::size_t strips() const noexcept { return minima.size(); }
  const std::vector<int>& cell(std::size_t i, std::size_t j) const {
    return cells.at(i - 1).at(j - 1);
  }
  const std::vector<int>& block(std::size_t j) const { return blocks.at(j - 1); }
  const std::vector<int>& hstrip(std::size_t i) const { return hstrips.at(i - 1); }
  /// Index i of the horizontal strip H_i containing value v (minima included, so
  /// m_i lies in strip i).
  std::size_t strip_of_value(int v) const;
};

/// Throws InvalidInput on the empty permutation.
GridDecomposition decompose(const Permutation& pi);

/// Interleaves m_1 B_1 ... m_k B_k back into a permutation.
Permutation reconstruct(const GridDecomposition& grid);

/// Textual rendering of the grid: one line per horizontal strip (top strip first),
/// one column group per vertical strip.
std::string render_grid(const GridDecomposition& grid);

struct StructuralCondition {
  std::string name;
  bool holds;
  std::string detail;
};

/// Necessary (not sufficient) conditions for 132-sortability, each evaluated
/// independently. A pass does not imply the permutation is sortable.
struct StructuralReport {
  std::vector<StructuralCondition> conditions;
  bool passed() const;
};

StructuralReport structural_check(const Permutation& pi);

/// Cells C_{i,k} of the last vertical strip that are active: no nonempty C_{u,v} with
/// u > i, v < k, and the union of C_{j,k} for j > i is increasing.
/// Throws InvalidInput if pi is not 132-sortable.
std::vector<std::size_t> active_cells(const Permutation& pi);

enum class InsertionKind { NewMinimum, Min, Cons };

struct Insertion {
  InsertionKind kind = InsertionKind::NewMinimum;
  std::size_t cell = 0;  ///< i of C_{i,k}; ignored for NewMinimum
};

enum class Rejection { None, Inactive, IllegalOp, EmptyCell };

struct InsertionResult {
  std::optional<Permutation> permutation;
  Rejection rejection = Rejection::None;
  bool accepted() const noexcept { return permutation.has_value(); }
};

const char* to_string(Rejection rejection);

/// Appends a new rightmost element:
///  NewMinimum  - a new smallest value (always legal);
///  Min(i)      - a new minimum of C_{i,k} (legal iff the cell is empty or the last
///                entry of pi lies in C_{l,k} with l > i);
///  Cons(i)     - last entry of C_{i,k} plus one (legal iff l <= i).
/// Throws InvalidInput if pi is not 132-sortable or i is outside 1..k.
InsertionResult insert(const Permutation& pi, Insertion op);
/// As insert, but trusts the caller that pi is 132-sortable.
InsertionResult insert_into_sortable(const Permutation& pi, Insertion op);

/// The legal operation for cell i of a sortable permutation (Min for an empty cell).
InsertionKind legal_kind(const Permutation& pi, const GridDecomposition& grid, std::size_t cell);

/// Children of a sortable pi in the generating tree: the new-minimum child first, then
/// one child per active cell in increasing cell order.
std::vector<Permutation> sortable_children(const Permutation& pi);

/// Sort_n(132) grown from "1" by repeated insertion. Each level is expanded on OpenMP
/// threads; the result is sorted lexicographically.
std::vector<Permutation> generate_sortable(std::size_t n, std::size_t cap = kDefaultPermutationCap);
std::vector<Permutation> generate_sortable_serial(std::size_t n,
                                                  std::size_t cap = kDefaultPermutationCap);

/// Number of members of `level` having t active cells, keyed by t.
std::map<std::size_t, std::size_t> active_cell_histogram(const std::vector<Permutation>& level);

/// counts[k] = number of pi in Sort_n(132) with k ltr-minima (index 0 unused).
std::vector<std::size_t> minima_distribution(std::size_t n,
                                             std::size_t cap = kDefaultPermutationCap);

}  // namespace patternsort
