#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace teamcomp {

enum class ErrorCode {
  kRange,
  kSize,
  kShape,
  kIndex,
  kDist,
  kTerminal,
  kCoverage,
  kRedundant,
  kBudget,
  kPrecond,
  kParams,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every contract violation in the library. The
// code is machine-checkable; the message names the offending field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace teamcomp
