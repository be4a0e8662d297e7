#include "orderdim/error.hpp"

namespace orderdim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kReflexiveViolation: return "ReflexiveViolation";
    case ErrorKind::kTransitivityViolation: return "TransitivityViolation";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kCycleIntroduced: return "CycleIntroduced";
    case ErrorKind::kElementMismatch: return "ElementMismatch";
    case ErrorKind::kNotLinear: return "NotLinear";
    case ErrorKind::kTooSmall: return "TooSmall";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kNotARealizer: return "NotARealizer";
    case ErrorKind::kInvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::kNotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::kCycleFound: return "CycleFound";
    case ErrorKind::kColinear: return "Colinear";
    case ErrorKind::kColinearityUnavoidable: return "ColinearityUnavoidable";
    case ErrorKind::kNotExtendable: return "NotExtendable";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::string> witness)
    : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

}  // namespace orderdim
