#include "gbm/error.hpp"

namespace gbm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorKind::kRegime: return "REGIME";
    case ErrorKind::kInfeasible: return "NO_SEPARATING_WINDOW";
    case ErrorKind::kConflict: return "CONFLICT";
    case ErrorKind::kPhase1Degenerate: return "PHASE1_DEGENERATE";
    case ErrorKind::kIo: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace gbm
