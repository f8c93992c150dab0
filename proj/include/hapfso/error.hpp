#pragma once

#include <stdexcept>
#include <string>

namespace hapfso {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateBeam,
  kGeometryInfeasible,
  kAngleOverflow,
  kNoFeasibleAlpha,
  kNoFeasibleBeta,
  kEnergyInfeasible,
  kDesignInfeasible,
  kConfig,
  kInvariantViolation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hapfso
