#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orderdim {

enum class ErrorKind {
  kReflexiveViolation,
  kTransitivityViolation,
  kDuplicateLabel,
  kShapeMismatch,
  kCycleIntroduced,
  kElementMismatch,
  kNotLinear,
  kTooSmall,
  kLimitExceeded,
  kNotARealizer,
  kInvalidEmbedding,
  kNotOrderPreserving,
  kCycleFound,
  kColinear,
  kColinearityUnavoidable,
  kNotExtendable,
  kInvalidArgument,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this exception. `witness` carries
// the offending labels (a pair, a triple, a cycle, ...) when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace orderdim
