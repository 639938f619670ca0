#pragma once

#include <stdexcept>
#include <string>

namespace wdsaw {

enum class ErrorCode {
  invalid_argument = 1,
  zero_constant_term,
  bad_constant_term,
  empty_series,
  unsupported_family,
  limit_exceeded,
  no_root_in_range,
  non_convergence,
  target_unreachable,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by iterative numerics; carries the worst residual reached.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double worst_residual)
      : Error(ErrorCode::non_convergence, what), worst_residual_(worst_residual) {}

  double worst_residual() const noexcept { return worst_residual_; }

 private:
  double worst_residual_;
};

}  // namespace wdsaw
