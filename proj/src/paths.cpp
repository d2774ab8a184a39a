#include "patternsort/paths.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "patternsort/error.hpp"
#include "patternsort/parallel.hpp"

namespace patternsort {

namespace {

int delta(Step s) {
  switch (s) {
    case Step::U:
      return 1;
    case Step::D:
      return -1;
    case Step::H:
      return 0;
  }
  return 0;
}

template <class Steps, class StepOf>
void check_motzkin(const Steps& steps, StepOf step_of, const char* kind) {
  int height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += delta(step_of(steps[i]));
    if (height < 0) {
      throw InvalidInput(std::string(kind) + ": falls below the axis at step " +
                         std::to_string(i + 1));
    }
  }
  if (height != 0) throw InvalidInput(std::string(kind) + ": does not end on the axis");
}

std::vector<Step> parse_steps(std::string_view text, bool allow_h, const char* kind) {
  std::vector<Step> steps;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'U':
        steps.push_back(Step::U);
        break;
      case 'D':
        steps.push_back(Step::D);
        break;
      case 'H':
        if (allow_h) {
          steps.push_back(Step::H);
          break;
        }
        [[fallthrough]];
      default:
        throw InvalidInput(std::string(kind) + ": unexpected character '" + c + "'");
    }
  }
  return steps;
}

std::string steps_to_string(const std::vector<Step>& steps) {
  std::string out;
  for (Step s : steps) out += static_cast<char>(s);
  return out;
}

}  // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (Step s : steps_) require(s != Step::H, "Dyck path: horizontal step");
  check_motzkin(steps_, [](Step s) { return s; }, "Dyck path");
}

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  check_motzkin(steps_, [](Step s) { return s; }, "Motzkin path");
}

LabeledMotzkinPath::LabeledMotzkinPath(std::vector<LabeledStep> steps)
    : steps_(std::move(steps)) {
  check_motzkin(steps_, [](const LabeledStep& s) { return s.step; }, "labeled Motzkin path");
  int height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const LabeledStep& s = steps_[i];
    if (s.step == Step::H) {
      const int top = height == 0 ? 1 : 2;
      if (s.label < 0 || s.label > top) {
        throw InvalidInput("labeled Motzkin path: label " + std::to_string(s.label) +
                           " not allowed at height " + std::to_string(height) + " (step " +
                           std::to_string(i + 1) + ")");
      }
    } else {
      steps_[i].label = 0;
    }
    height += delta(s.step);
  }
}

DyckPath parse_dyck(std::string_view text) { return DyckPath(parse_steps(text, false, "Dyck path")); }

MotzkinPath parse_motzkin(std::string_view text) {
  return MotzkinPath(parse_steps(text, true, "Motzkin path"));
}

LabeledMotzkinPath parse_labeled_motzkin(std::string_view text) {
  std::vector<LabeledStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'U') {
      steps.push_back({Step::U, 0});
    } else if (c == 'D') {
      steps.push_back({Step::D, 0});
    } else if (c == 'H') {
      if (i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        throw InvalidInput("labeled Motzkin path: H needs a label digit");
      }
      steps.push_back({Step::H, text[++i] - '0'});
    } else {
      throw InvalidInput(std::string("labeled Motzkin path: unexpected character '") + c + "'");
    }
  }
  return LabeledMotzkinPath(std::move(steps));
}

std::string to_string(const DyckPath& path) { return steps_to_string(path.steps()); }
std::string to_string(const MotzkinPath& path) { return steps_to_string(path.steps()); }

std::string to_string(const LabeledMotzkinPath& path) {
  std::string out;
  for (const auto& s : path.steps()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>(s.step);
    if (s.step == Step::H) out += static_cast<char>('0' + s.label);
  }
  return out;
}

namespace {

void grow_dyck(std::vector<Step>& prefix, int height, std::size_t length,
               std::vector<DyckPath>& out) {
  const std::size_t remaining = length - prefix.size();
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (height > 0) {
    prefix.push_back(Step::D);
    grow_dyck(prefix, height - 1, length, out);
    prefix.pop_back();
  }
  if (static_cast<std::size_t>(height) + 1 <= remaining - 1) {
    prefix.push_back(Step::U);
    grow_dyck(prefix, height + 1, length, out);
    prefix.pop_back();
  }
}

std::vector<DyckPath> dyck_below(std::vector<Step> prefix, std::size_t length) {
  int height = 0;
  for (Step s : prefix) height += delta(s);
  std::vector<DyckPath> out;
  grow_dyck(prefix, height, length, out);
  return out;
}

/// Valid Dyck prefixes of a fixed length, lexicographic, used as parallel seeds.
std::vector<std::vector<Step>> dyck_seeds(std::size_t length, std::size_t depth) {
  std::vector<std::vector<Step>> seeds{{}};
  for (std::size_t d = 0; d < std::min(depth, length); ++d) {
    std::vector<std::vector<Step>> next;
    for (const auto& seed : seeds) {
      int height = 0;
      for (Step s : seed) height += delta(s);
      const std::size_t remaining = length - seed.size();
      if (height > 0) {
        next.push_back(seed);
        next.back().push_back(Step::D);
      }
      if (static_cast<std::size_t>(height) + 1 <= remaining - 1) {
        next.push_back(seed);
        next.back().push_back(Step::U);
      }
    }
    seeds = std::move(next);
  }
  return seeds;
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(std::size_t semilength, std::size_t cap) {
  require_within_cap(semilength, cap, "Dyck path enumeration");
  const auto seeds = dyck_seeds(2 * semilength, 6);
  return parallel_collect<DyckPath>(
      seeds.size(), [&](std::size_t i) { return dyck_below(seeds[i], 2 * semilength); });
}

std::vector<DyckPath> enumerate_dyck_serial(std::size_t semilength, std::size_t cap) {
  require_within_cap(semilength, cap, "Dyck path enumeration");
  return dyck_below({}, 2 * semilength);
}

std::vector<MotzkinPath> enumerate_motzkin(std::size_t length, std::size_t cap) {
  require_within_cap(length, cap, "Motzkin path enumeration");
  std::vector<MotzkinPath> out;
  std::vector<Step> prefix;
  std::function<void(int)> grow = [&](int height) {
    const std::size_t remaining = length - prefix.size();
    if (remaining == 0) {
      if (height == 0) out.emplace_back(prefix);
      return;
    }
    for (Step s : {Step::D, Step::H, Step::U}) {
      const int h = height + delta(s);
      if (h < 0 || static_cast<std::size_t>(h) > remaining - 1) continue;
      prefix.push_back(s);
      grow(h);
      prefix.pop_back();
    }
  };
  grow(0);
  return out;
}

std::vector<LabeledMotzkinPath> enumerate_labeled_motzkin(std::size_t length, std::size_t cap) {
  require_within_cap(length, cap, "labeled Motzkin path enumeration");
  std::vector<LabeledMotzkinPath> out;
  for (const auto& shape : enumerate_motzkin(length, cap)) {
    // Expand every H into each label admissible at its height, odometer style.
    std::vector<LabeledStep> steps;
    std::vector<std::size_t> h_index;
    std::vector<int> top;
    int height = 0;
    for (Step s : shape.steps()) {
      if (s == Step::H) {
        h_index.push_back(steps.size());
        top.push_back(height == 0 ? 1 : 2);
      }
      steps.push_back({s, 0});
      height += delta(s);
    }
    while (true) {
      out.emplace_back(steps);
      std::size_t j = h_index.size();
      while (j > 0) {
        LabeledStep& h = steps[h_index[j - 1]];
        if (h.label < top[j - 1]) {
          ++h.label;
          break;
        }
        h.label = 0;
        --j;
      }
      if (j == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t double_rises(const DyckPath& path) {
  const auto& s = path.steps();
  std::size_t count = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == Step::U && s[i] == Step::U) ++count;
  }
  return count;
}

std::size_t final_descent_length(const DyckPath& path) {
  const auto& s = path.steps();
  std::size_t count = 0;
  while (count < s.size() && s[s.size() - 1 - count] == Step::D) ++count;
  return count;
}

std::vector<DyckPath> dyck_children(const DyckPath& path) {
  const auto& s = path.steps();
  const std::size_t run = final_descent_length(path);
  const std::size_t start = s.size() - run;
  std::vector<DyckPath> children;
  for (std::size_t at = start; at <= s.size(); ++at) {
    std::vector<Step> child(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(at));
    child.push_back(Step::U);
    child.push_back(Step::D);
    child.insert(child.end(), s.begin() + static_cast<std::ptrdiff_t>(at), s.end());
    children.emplace_back(std::move(child));
  }
  return children;
}

DyckPath dyck_parent(const DyckPath& path) {
  require(path.size() > 0, "dyck_parent: empty path has no parent");
  std::vector<Step> s = path.steps();
  std::size_t last_up = s.size();
  while (s[last_up - 1] != Step::U) --last_up;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(last_up - 1),
          s.begin() + static_cast<std::ptrdiff_t>(last_up + 1));
  return DyckPath(std::move(s));
}

}  // namespace patternsort
