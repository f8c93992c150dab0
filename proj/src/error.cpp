#include "hapfso/error.hpp"

namespace hapfso {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDegenerateBeam: return "degenerate-beam";
    case ErrorCode::kGeometryInfeasible: return "geometry-infeasible";
    case ErrorCode::kAngleOverflow: return "angle-overflow";
    case ErrorCode::kNoFeasibleAlpha: return "no-feasible-alpha";
    case ErrorCode::kNoFeasibleBeta: return "no-feasible-beta";
    case ErrorCode::kEnergyInfeasible: return "energy-infeasible";
    case ErrorCode::kDesignInfeasible: return "design-infeasible";
    case ErrorCode::kConfig: return "config-error";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

}  // namespace hapfso
