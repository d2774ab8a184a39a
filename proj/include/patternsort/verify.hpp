#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace patternsort {

enum class Scope { All, Machine, Grid, Rgf, Bijections, Sequences };

const char* to_string(Scope scope);
/// Throws InvalidInput for an unknown name.
Scope parse_scope(std::string_view text);

struct CheckResult {
  Scope scope;
  std::string name;
  bool passed;
  std::string counterexample;  ///< empty when passed
  double millis;
};

struct VerifyReport {
  Scope scope;
  std::size_t nmax;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Names of the exhaustive checks run for `scope`, in execution order.
std::vector<std::string> verify_check_names(Scope scope);

/// Runs every exhaustive property check of `scope` for sizes up to nmax and reports the
/// first counterexample of each failing check. Throws ResourceLimit if nmax exceeds
/// the permutation enumeration cap.
VerifyReport run_verify_suite(Scope scope, std::size_t nmax);

}  // namespace patternsort
