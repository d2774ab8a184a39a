#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patternsort {

/// A permutation of {1..n} in one-line notation. Values and positions are 1-based
/// in the mathematical sense; operator[] takes a 0-based index like any container.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t index) const { return values_[index]; }
  /// Entry at 1-based position `position`.
  int at(std::size_t position) const { return values_.at(position - 1); }
  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  Permutation reversed() const;
  /// Drops the last entry and standardizes what remains.
  Permutation without_last() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(Trusted, std::vector<int> values) : values_(std::move(values)) {}
  friend Permutation standardize(std::span<const int> seq);
  friend std::vector<Permutation> all_permutations(std::size_t n);

  std::vector<int> values_;
};

/// Replaces the i-th smallest entry by i. Entries must be distinct.
Permutation standardize(std::span<const int> seq);

/// Word standardization: equal letters map to equal values (std of an RGF pattern).
std::vector<int> standardize_word(std::span<const int> seq);

/// Inserts `value + 0.5` conceptually at the end of `seq` and re-standardizes.
/// `value` may be 0 to append a new global minimum.
Permutation append_between(const Permutation& pi, int value);

/// Every permutation of length n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Parses "2 4 1 3", "2,4,1,3" or the compact "2413" (only when n <= 9).
Permutation parse_permutation(std::string_view text);
/// Parses a sequence of positive integers with the same conventions (no bijectivity check).
std::vector<int> parse_sequence(std::string_view text);

std::string to_string(const Permutation& pi);
std::string to_string(std::span<const int> seq);
/// "2413" when every entry is a single digit, otherwise space-separated.
std::string to_compact_string(std::span<const int> seq);

}  // namespace patternsort
