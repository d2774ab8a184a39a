#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patternsort {

inline constexpr std::size_t kDefaultRgfCap = 12;

/// Restricted growth function: r_1 = 1 and r_i <= 1 + max(r_1..r_{i-1}).
/// The empty word is admitted as the RGF of length 0.
class Rgf {
 public:
  Rgf() = default;
  /// Throws InvalidRgf carrying the first offending 1-based position.
  explicit Rgf(std::vector<int> letters);
  Rgf(std::initializer_list<int> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t index) const { return letters_[index]; }
  std::span<const int> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  /// Largest letter (number of blocks); 0 for the empty word.
  int max() const noexcept { return max_; }

  friend bool operator==(const Rgf& a, const Rgf& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Rgf& a, const Rgf& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<int> letters_;
  int max_ = 0;
};

/// Blocks of a set partition of {1..n}, each sorted, ordered by least element.
struct SetPartition {
  std::vector<std::vector<int>> blocks;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Throws InvalidInput unless the blocks are disjoint, nonempty, cover 1..n and are
/// listed by increasing least element with sorted contents.
void validate(const SetPartition& partition);

SetPartition rgf_to_partition(const Rgf& r);
Rgf partition_to_rgf(const SetPartition& partition);

/// "12132" when every letter is a digit, otherwise space-separated.
std::string to_string(const Rgf& r);
Rgf parse_rgf(std::string_view text);
/// "13-25-4" for n <= 9; for n >= 10 elements inside a block are comma-separated.
std::string to_string(const SetPartition& partition);
SetPartition parse_partition(std::string_view text);

/// Some subsequence of R standardizes to std(Q). Q need not be an RGF.
bool rgf_contains(const Rgf& r, std::span<const int> pattern);
inline bool rgf_contains(const Rgf& r, std::initializer_list<int> pattern) {
  return rgf_contains(r, std::span<const int>(pattern.begin(), pattern.size()));
}

/// Every RGF of length n, lexicographic (Bell-number many).
std::vector<Rgf> enumerate_rgfs(std::size_t n, std::size_t cap = kDefaultRgfCap);

/// R_n(Q) by the growth rule with pruning: a prefix containing Q is never extended.
/// Subtrees below fixed-length prefixes are expanded on OpenMP threads; output is
/// lexicographic.
std::vector<Rgf> enumerate_avoiders(std::size_t n, std::span<const int> pattern,
                                    std::size_t cap = kDefaultRgfCap);
/// Single-threaded pruned enumeration.
std::vector<Rgf> enumerate_avoiders_serial(std::size_t n, std::span<const int> pattern,
                                           std::size_t cap = kDefaultRgfCap);
/// Filters all of R_n; the oracle for the pruned enumerations.
std::vector<Rgf> enumerate_avoiders_by_filter(std::size_t n, std::span<const int> pattern,
                                              std::size_t cap = kDefaultRgfCap);

/// counts[k] = number of words in `words` with maximum k.
std::vector<std::size_t> max_distribution(const std::vector<Rgf>& words, std::size_t n);

/// The eleven patterns sharing the A007317 avoidance sequence.
const std::array<std::array<int, 5>, 11>& wilf_class_patterns();

/// R with the first occurrence of every letter deleted.
std::vector<int> w_subword(const Rgf& r);
bool is_weakly_increasing(std::span<const int> seq);

struct SiteInterval {
  int low;
  int high;
  bool contains(int j) const noexcept { return low <= j && j <= high; }
  friend bool operator==(const SiteInterval&, const SiteInterval&) = default;
};

/// Letters j with R j still 1221-avoiding: {t..M+1}, M = max(R), t = largest letter
/// occurring more than once (1 if none). Throws InvalidInput if R contains 1221.
SiteInterval active_sites_1221(const Rgf& r);

/// 1-based positions i >= 2 with r_i = max(r_1..r_{i-1}).
std::vector<std::size_t> repeated_ltr_maxima(const Rgf& r);
/// R with its strict ltr-maxima (first occurrences) deleted.
std::vector<int> strip_ltr_maxima(const Rgf& r);
/// R with its repeated ltr-maxima deleted; always an RGF.
Rgf alpha(const Rgf& r);

}  // namespace patternsort
