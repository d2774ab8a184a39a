#include "patternsort/rgf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "patternsort/error.hpp"
#include "patternsort/parallel.hpp"
#include "patternsort/pattern.hpp"
#include "patternsort/permutation.hpp"

namespace patternsort {

Rgf::Rgf(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int x = letters_[i];
    if (x < 1 || x > max_ + 1) {
      throw InvalidRgf("invalid RGF at position " + std::to_string(i + 1) + ": letter " +
                           std::to_string(x) + " exceeds 1 + max of prefix (" +
                           std::to_string(max_) + ")",
                       i + 1);
    }
    max_ = std::max(max_, x);
  }
}

Rgf::Rgf(std::initializer_list<int> letters) : Rgf(std::vector<int>(letters)) {}

void validate(const SetPartition& partition) {
  std::size_t n = 0;
  for (const auto& block : partition.blocks) n += block.size();
  std::vector<bool> seen(n + 1, false);
  int previous_least = 0;
  for (const auto& block : partition.blocks) {
    require(!block.empty(), "set partition: empty block");
    require(std::is_sorted(block.begin(), block.end()), "set partition: unsorted block");
    require(block.front() > previous_least, "set partition: blocks not ordered by least element");
    previous_least = block.front();
    for (int x : block) {
      require(x >= 1 && static_cast<std::size_t>(x) <= n && !seen[x],
              "set partition: blocks must cover 1..n exactly once");
      seen[x] = true;
    }
  }
}

SetPartition rgf_to_partition(const Rgf& r) {
  SetPartition p;
  p.blocks.resize(static_cast<std::size_t>(r.max()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    p.blocks[r[i] - 1].push_back(static_cast<int>(i + 1));
  }
  return p;
}

Rgf partition_to_rgf(const SetPartition& partition) {
  validate(partition);
  std::size_t n = 0;
  for (const auto& block : partition.blocks) n += block.size();
  std::vector<int> letters(n);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    for (int x : partition.blocks[b]) letters[x - 1] = static_cast<int>(b + 1);
  }
  return Rgf(std::move(letters));
}

std::string to_string(const Rgf& r) { return to_compact_string(r.letters()); }

Rgf parse_rgf(std::string_view text) {
  std::string trimmed(text);
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                               [](char c) { return c == '\n' || c == '\r'; }),
                trimmed.end());
  if (trimmed.empty()) return Rgf{};
  return Rgf(parse_sequence(trimmed));
}

std::string to_string(const SetPartition& partition) {
  std::size_t n = 0;
  for (const auto& block : partition.blocks) n += block.size();
  const bool compact = n <= 9;
  std::string out;
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (b) out += '-';
    for (std::size_t i = 0; i < partition.blocks[b].size(); ++i) {
      if (i && !compact) out += ',';
      out += std::to_string(partition.blocks[b][i]);
    }
  }
  return out;
}

SetPartition parse_partition(std::string_view text) {
  // Compact digits only make sense for n <= 9, where no element contains a '0'.
  const bool compact = text.find(',') == std::string_view::npos &&
                       text.find('0') == std::string_view::npos;
  SetPartition p;
  std::string s(text);
  std::istringstream in(s);
  std::string block_text;
  while (std::getline(in, block_text, '-')) {
    std::vector<int> block;
    if (compact) {
      for (char c : block_text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        require(std::isdigit(static_cast<unsigned char>(c)) != 0,
                "set partition: bad character in '" + s + "'");
        block.push_back(c - '0');
      }
    } else {
      std::istringstream items(block_text);
      std::string item;
      while (std::getline(items, item, ',')) {
        try {
          block.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
          throw InvalidInput("set partition: bad element '" + item + "'");
        }
      }
    }
    p.blocks.push_back(std::move(block));
  }
  validate(p);
  return p;
}

bool rgf_contains(const Rgf& r, std::span<const int> pattern) {
  return contains(r.letters(), pattern);
}

namespace {

/// Depth-first growth below `prefix`, appending each complete word of length n.
/// With a pattern, only the newest letter can complete an occurrence, so each
/// extension is tested with the occurrence anchored at the last position.
void grow_words(std::vector<int>& prefix, int max, std::size_t n, std::span<const int> pattern,
                bool prune, std::vector<Rgf>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int j = 1; j <= max + 1; ++j) {
    prefix.push_back(j);
    if (!prune || !contains(prefix, pattern, Anchor::Last)) {
      grow_words(prefix, std::max(max, j), n, pattern, prune, out);
    }
    prefix.pop_back();
  }
}

std::vector<Rgf> grow_from(std::vector<int> prefix, std::size_t n, std::span<const int> pattern,
                           bool prune) {
  std::vector<Rgf> out;
  const int max = prefix.empty() ? 0 : *std::max_element(prefix.begin(), prefix.end());
  grow_words(prefix, max, n, pattern, prune, out);
  return out;
}

/// All pattern-avoiding prefixes of length min(n, depth) in lexicographic order.
std::vector<std::vector<int>> seed_prefixes(std::size_t n, std::span<const int> pattern,
                                            std::size_t depth) {
  std::vector<std::vector<int>> seeds;
  for (const Rgf& r : grow_from({}, std::min(n, depth), pattern, true)) {
    seeds.emplace_back(r.begin(), r.end());
  }
  return seeds;
}

constexpr std::size_t kSeedDepth = 5;

}  // namespace

std::vector<Rgf> enumerate_rgfs(std::size_t n, std::size_t cap) {
  require_within_cap(n, cap, "RGF enumeration");
  return grow_from({}, n, {}, false);
}

std::vector<Rgf> enumerate_avoiders(std::size_t n, std::span<const int> pattern,
                                    std::size_t cap) {
  require_within_cap(n, cap, "RGF enumeration");
  require(!pattern.empty(), "enumerate_avoiders: empty pattern");
  const auto seeds = seed_prefixes(n, pattern, kSeedDepth);
  return parallel_collect<Rgf>(seeds.size(),
                               [&](std::size_t i) { return grow_from(seeds[i], n, pattern, true); });
}

std::vector<Rgf> enumerate_avoiders_serial(std::size_t n, std::span<const int> pattern,
                                           std::size_t cap) {
  require_within_cap(n, cap, "RGF enumeration");
  require(!pattern.empty(), "enumerate_avoiders: empty pattern");
  return grow_from({}, n, pattern, true);
}

std::vector<Rgf> enumerate_avoiders_by_filter(std::size_t n, std::span<const int> pattern,
                                              std::size_t cap) {
  std::vector<Rgf> out;
  for (auto& r : enumerate_rgfs(n, cap)) {
    if (!rgf_contains(r, pattern)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> max_distribution(const std::vector<Rgf>& words, std::size_t n) {
  std::vector<std::size_t> counts(n + 1, 0);
  for (const auto& r : words) ++counts.at(static_cast<std::size_t>(r.max()));
  return counts;
}

const std::array<std::array<int, 5>, 11>& wilf_class_patterns() {
  static const std::array<std::array<int, 5>, 11> patterns{{
      {1, 2, 1, 2, 3}, {1, 2, 1, 3, 2}, {1, 2, 1, 3, 4}, {1, 2, 2, 1, 3},
      {1, 2, 2, 3, 1}, {1, 2, 2, 3, 4}, {1, 2, 3, 1, 2}, {1, 2, 3, 2, 1},
      {1, 2, 3, 2, 3}, {1, 2, 3, 3, 1}, {1, 2, 3, 3, 2},
  }};
  return patterns;
}

std::vector<int> w_subword(const Rgf& r) {
  std::vector<int> out;
  int seen_max = 0;
  for (int x : r) {
    // In an RGF the first occurrence of a letter is exactly a new maximum.
    if (x > seen_max) {
      seen_max = x;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_weakly_increasing(std::span<const int> seq) {
  return std::is_sorted(seq.begin(), seq.end());
}

SiteInterval active_sites_1221(const Rgf& r) {
  require(!rgf_contains(r, {1, 2, 2, 1}), "active_sites_1221: " + to_string(r) +
                                              " contains 1221");
  const auto repeats = w_subword(r);
  const int t = repeats.empty() ? 1 : *std::max_element(repeats.begin(), repeats.end());
  return {t, r.max() + 1};
}

std::vector<std::size_t> repeated_ltr_maxima(const Rgf& r) {
  std::vector<std::size_t> out;
  int prefix_max = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i > 0 && r[i] == prefix_max) out.push_back(i + 1);
    prefix_max = std::max(prefix_max, r[i]);
  }
  return out;
}

std::vector<int> strip_ltr_maxima(const Rgf& r) { return w_subword(r); }

Rgf alpha(const Rgf& r) {
  std::vector<int> kept;
  int prefix_max = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(i > 0 && r[i] == prefix_max)) kept.push_back(r[i]);
    prefix_max = std::max(prefix_max, r[i]);
  }
  return Rgf(std::move(kept));
}

}  // namespace patternsort
