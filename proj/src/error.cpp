#include "wdsaw/error.hpp"

namespace wdsaw {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::zero_constant_term: return "ZeroConstantTerm";
    case ErrorCode::bad_constant_term: return "BadConstantTerm";
    case ErrorCode::empty_series: return "EmptySeries";
    case ErrorCode::unsupported_family: return "UnsupportedFamily";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
    case ErrorCode::no_root_in_range: return "NoRootInRange";
    case ErrorCode::non_convergence: return "NonConvergence";
    case ErrorCode::target_unreachable: return "TargetUnreachable";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace wdsaw
