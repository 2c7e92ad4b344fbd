#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamcomp/analysis.hpp"
#include "teamcomp/solver.hpp"

namespace teamcomp {

// Seeded batches of checker runs over generated instances. Every suite is a
// pure function of its options.
struct SuiteOptions {
  std::uint64_t seed = 7;
  // Instances per round count.
  int instances = 20;
  // Restricts the round counts tried; unset means the suite's default list.
  std::optional<int> rounds;
  // Restricts theorem2/theorem4 to one utility; unset runs both.
  std::optional<UtilityKind> utility;
  int c_max = 4;
  Lemma5Options lemma5;
  SolveOptions solve;
};

// theorem1, lemma2, theorem2, lemma5, theorem3, theorem4, lemma6.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all" with claims prefixed by the suite
// name. Throws Error{kParams} on an unknown name or option out of range.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace teamcomp
