#include "patternsort/pattern.hpp"

#include <algorithm>
#include <cctype>

#include "patternsort/error.hpp"

namespace patternsort {

namespace {

int sign(int a, int b) { return (a > b) - (a < b); }

/// Depth-first search over increasing index tuples. `chosen` holds 0-based indices.
class OccurrenceSearch {
 public:
  OccurrenceSearch(std::span<const int> host, std::span<const int> pattern, Anchor anchor,
                   const std::function<bool(const Occurrence&)>& visit)
      : host_(host), pattern_(pattern), anchor_(anchor), visit_(visit) {
    chosen_.reserve(pattern.size());
  }

  /// Returns false when the visitor asked to stop.
  bool run() {
    if (pattern_.size() > host_.size()) return true;
    return extend(0);
  }

 private:
  bool consistent(std::size_t host_index) const {
    const std::size_t j = chosen_.size();
    for (std::size_t l = 0; l < j; ++l) {
      if (sign(pattern_[j], pattern_[l]) != sign(host_[host_index], host_[chosen_[l]])) {
        return false;
      }
    }
    return true;
  }

  bool extend(std::size_t start) {
    const std::size_t j = chosen_.size();
    const std::size_t k = pattern_.size();
    if (j == k) {
      Occurrence occ(chosen_.size());
      for (std::size_t l = 0; l < k; ++l) occ[l] = chosen_[l] + 1;
      return visit_(occ);
    }
    const std::size_t n = host_.size();
    std::size_t lo = start;
    std::size_t hi = n - (k - j);  // leave room for the remaining letters
    if (anchor_ == Anchor::First && j == 0) hi = std::min<std::size_t>(hi, 0);
    if (anchor_ == Anchor::Last && j + 1 == k) lo = std::max(lo, n - 1);
    for (std::size_t i = lo; i <= hi && i < n; ++i) {
      if (!consistent(i)) continue;
      chosen_.push_back(i);
      const bool keep_going = extend(i + 1);
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  std::span<const int> host_;
  std::span<const int> pattern_;
  Anchor anchor_;
  const std::function<bool(const Occurrence&)>& visit_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

bool for_each_occurrence(std::span<const int> host, std::span<const int> pattern,
                         const std::function<bool(const Occurrence&)>& visit) {
  return OccurrenceSearch(host, pattern, Anchor::None, visit).run();
}

std::optional<Occurrence> find_occurrence(std::span<const int> host,
                                          std::span<const int> pattern, Anchor anchor) {
  if (pattern.empty()) return Occurrence{};
  if (anchor != Anchor::None && host.empty()) return std::nullopt;
  std::optional<Occurrence> found;
  const std::function<bool(const Occurrence&)> take_first = [&](const Occurrence& occ) {
    found = occ;
    return false;
  };
  OccurrenceSearch(host, pattern, anchor, take_first).run();
  return found;
}

bool avoids_all(const Permutation& host, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return contains_classical(host, p); });
}

MeshPattern::MeshPattern(Permutation tau_in, std::set<std::pair<int, int>> shaded_in)
    : tau(std::move(tau_in)), shaded(std::move(shaded_in)) {
  const int k = static_cast<int>(tau.size());
  for (const auto& [a, b] : shaded) {
    if (a < 0 || b < 0 || a > k || b > k) {
      throw InvalidInput("shaded square (" + std::to_string(a) + "," + std::to_string(b) +
                         ") outside [0," + std::to_string(k) + "]^2");
    }
  }
}

const MeshPattern& mu() {
  static const MeshPattern pattern(Permutation{1, 3, 2}, {{0, 2}, {2, 0}, {2, 1}});
  return pattern;
}

bool contains_mesh(const Permutation& host, const MeshPattern& mesh) {
  const int n = static_cast<int>(host.size());
  const std::size_t k = mesh.tau.size();
  bool found = false;
  const std::function<bool(const Occurrence&)> check = [&](const Occurrence& occ) {
    // Sentinel-padded positions and sorted values of the occurrence.
    std::vector<int> pos(k + 2), val(k + 2);
    pos[0] = 0;
    val[0] = 0;
    pos[k + 1] = n + 1;
    val[k + 1] = n + 1;
    std::vector<int> values;
    for (std::size_t l = 0; l < k; ++l) {
      pos[l + 1] = static_cast<int>(occ[l]);
      values.push_back(host.at(occ[l]));
    }
    std::sort(values.begin(), values.end());
    for (std::size_t l = 0; l < k; ++l) val[l + 1] = values[l];
    for (const auto& [a, b] : mesh.shaded) {
      for (int p = pos[a] + 1; p < pos[a + 1]; ++p) {
        const int v = host.at(static_cast<std::size_t>(p));
        if (v > val[b] && v < val[b + 1]) return true;  // square is occupied; try next
      }
    }
    found = true;
    return false;
  };
  for_each_occurrence(host.values(), mesh.tau.values(), check);
  return found;
}

bool mu_predicate(const Permutation& host) {
  const std::size_t n = host.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      for (std::size_t r = q + 1; r < n; ++r) {
        const int a = host[p], c = host[q], b = host[r];
        if (!(a < b && b < c)) continue;
        bool ok = true;
        for (std::size_t s = 0; s < p && ok; ++s) ok = host[s] < b || host[s] > c;
        for (std::size_t s = q + 1; s < r && ok; ++s) ok = host[s] > b;
        if (ok) return true;
      }
    }
  }
  return false;
}

MeshPattern parse_mesh(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "mu") return mu();
  const auto semi = s.find(';');
  Permutation tau = parse_permutation(s.substr(0, semi));
  std::set<std::pair<int, int>> shaded;
  if (semi != std::string::npos) {
    std::string rest = s.substr(semi + 1);
    std::size_t i = 0;
    while (i < rest.size()) {
      if (rest[i] != '(') throw InvalidInput("mesh pattern: expected '(' in " + rest);
      const auto comma = rest.find(',', i);
      const auto close = rest.find(')', i);
      if (comma == std::string::npos || close == std::string::npos || comma > close) {
        throw InvalidInput("mesh pattern: malformed square in " + rest);
      }
      try {
        shaded.emplace(std::stoi(rest.substr(i + 1, comma - i - 1)),
                       std::stoi(rest.substr(comma + 1, close - comma - 1)));
      } catch (const std::logic_error&) {
        throw InvalidInput("mesh pattern: non-numeric square in " + rest);
      }
      i = close + 1;
    }
  }
  return MeshPattern(std::move(tau), std::move(shaded));
}

std::string to_string(const MeshPattern& mesh) {
  std::string out = to_compact_string(mesh.tau.values()) + ";";
  for (const auto& [a, b] : mesh.shaded) {
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

}  // namespace patternsort
