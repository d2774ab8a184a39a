#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace patternsort {

/// Input violates an operation's precondition (bad permutation, pattern, word, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input rejected because of the entry at a 1-based position.
class InvalidAt : public InvalidInput {
 public:
  InvalidAt(const std::string& what, std::size_t position)
      : InvalidInput(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A restricted growth function failed validation at a 1-based position.
class InvalidRgf : public InvalidAt {
 public:
  using InvalidAt::InvalidAt;
};

/// Structural inconsistency discovered while inverting a map (e.g. popping an empty container).
class MalformedInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Requested enumeration size exceeds the configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

inline void require_within_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw ResourceLimit(std::string(what) + ": size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace patternsort
