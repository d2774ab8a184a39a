#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace patternsort {

inline constexpr std::size_t kDefaultPathCap = 12;

enum class Step : char { U = 'U', D = 'D', H = 'H' };

/// Sequence of U and D steps never dipping below the axis and ending on it.
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws InvalidInput if the steps are not a Dyck path.
  explicit DyckPath(std::vector<Step> steps);

  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
};

/// Motzkin path over U, D and unlabeled H.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  explicit MotzkinPath(std::vector<Step> steps);

  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
  friend auto operator<=>(const MotzkinPath& a, const MotzkinPath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<Step> steps_;
};

/// One step of a labeled Motzkin path; `label` is meaningful only for H.
struct LabeledStep {
  Step step;
  int label = 0;
  friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
  friend auto operator<=>(const LabeledStep&, const LabeledStep&) = default;
};

/// Motzkin path whose H steps carry label 0 or 1 at height 0, and 0, 1 or 2 above it.
class LabeledMotzkinPath {
 public:
  LabeledMotzkinPath() = default;
  explicit LabeledMotzkinPath(std::vector<LabeledStep> steps);

  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<LabeledStep>& steps() const noexcept { return steps_; }

  friend bool operator==(const LabeledMotzkinPath&, const LabeledMotzkinPath&) = default;
  friend auto operator<=>(const LabeledMotzkinPath& a, const LabeledMotzkinPath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<LabeledStep> steps_;
};

/// "UUDD"; whitespace is ignored on input.
DyckPath parse_dyck(std::string_view text);
MotzkinPath parse_motzkin(std::string_view text);
/// "H0 H1 U U D H2 H0 D H0 H0"; tokens may also be written without spaces.
LabeledMotzkinPath parse_labeled_motzkin(std::string_view text);

std::string to_string(const DyckPath& path);
std::string to_string(const MotzkinPath& path);
std::string to_string(const LabeledMotzkinPath& path);

/// All Dyck paths of the given semilength in lexicographic order (D < U).
std::vector<DyckPath> enumerate_dyck(std::size_t semilength, std::size_t cap = kDefaultPathCap);
std::vector<DyckPath> enumerate_dyck_serial(std::size_t semilength,
                                            std::size_t cap = kDefaultPathCap);
std::vector<MotzkinPath> enumerate_motzkin(std::size_t length, std::size_t cap = kDefaultPathCap);
std::vector<LabeledMotzkinPath> enumerate_labeled_motzkin(std::size_t length,
                                                          std::size_t cap = kDefaultPathCap);

/// Number of adjacent UU pairs.
std::size_t double_rises(const DyckPath& path);
/// Length of the final run of D steps.
std::size_t final_descent_length(const DyckPath& path);

/// Children in the peak-insertion tree: UD inserted before each D of the final
/// descent, then after the last D. For the empty path the only child is UD.
std::vector<DyckPath> dyck_children(const DyckPath& path);
/// Removes the last peak. Throws InvalidInput on the empty path.
DyckPath dyck_parent(const DyckPath& path);

}  // namespace patternsort
