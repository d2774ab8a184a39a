#include "patternsort/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "patternsort/error.hpp"

namespace patternsort {

namespace {

bool is_rearrangement_of_one_to_n(const std::vector<int>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (!is_rearrangement_of_one_to_n(values_)) {
    throw InvalidInput("not a permutation of 1..n: " + patternsort::to_string(values_));
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(Trusted{}, std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return Permutation(Trusted{}, std::move(v));
}

Permutation Permutation::reversed() const {
  return Permutation(Trusted{}, std::vector<int>(values_.rbegin(), values_.rend()));
}

Permutation Permutation::without_last() const {
  require(!values_.empty(), "without_last on the empty permutation");
  return standardize(std::span<const int>(values_).first(values_.size() - 1));
}

Permutation standardize(std::span<const int> seq) {
  std::vector<std::size_t> order(seq.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]]) {
      throw InvalidInput("standardize: duplicate entry " + std::to_string(seq[order[rank]]));
    }
    out[order[rank]] = static_cast<int>(rank + 1);
  }
  return Permutation(Permutation::Trusted{}, std::move(out));
}

std::vector<int> standardize_word(std::span<const int> seq) {
  std::vector<int> distinct(seq.begin(), seq.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> out;
  out.reserve(seq.size());
  for (int x : seq) {
    out.push_back(static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), x) - distinct.begin() + 1));
  }
  return out;
}

Permutation append_between(const Permutation& pi, int value) {
  // Doubling keeps everything integral: the new entry sits at 2*value+1.
  std::vector<int> scaled;
  scaled.reserve(pi.size() + 1);
  for (int v : pi) scaled.push_back(2 * v);
  scaled.push_back(2 * value + 1);
  return standardize(scaled);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation(Permutation::Trusted{}, v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  bool separated = false;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t') separated = true;
  }
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw InvalidInput("bad character in compact sequence: '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidInput("bad token in sequence: '" + token + "'");
    }
    int v = std::stoi(token);
    if (v < 1) throw InvalidInput("sequence entries must be positive");
    out.push_back(v);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(parse_sequence(text));
}

std::string to_string(std::span<const int> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string to_string(const Permutation& pi) { return to_string(pi.values()); }

std::string to_compact_string(std::span<const int> seq) {
  if (std::all_of(seq.begin(), seq.end(), [](int v) { return v >= 0 && v <= 9; })) {
    std::string out;
    for (int v : seq) out += static_cast<char>('0' + v);
    return out;
  }
  return to_string(seq);
}

}  // namespace patternsort
