#pragma once

#include <stdexcept>
#include <string>

namespace gbm {

enum class ErrorKind {
  kInvalidArgument,   // precondition violated by the caller
  kRegime,            // parameters outside the regime an algorithm is defined for
  kInfeasible,        // thresholds leave no separating window
  kConflict,          // location constraints are not two-colorable
  kPhase1Degenerate,  // dense phase 1 did not yield two usable clusters
  kIo,                // malformed input file
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorKind::kInvalidArgument, what);
}

}  // namespace gbm
