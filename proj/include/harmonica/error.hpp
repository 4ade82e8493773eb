#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonica {

/// Stable machine-readable failure categories. The CLI reports these as the
/// `code` field of its JSON error object.
enum class ErrorCode {
  invalid_argument,
  radius_guard,      // point outside the region where the operation is defined
  tail_bound,        // truncation error estimate exceeds the requested tolerance
  unbounded_tail,    // coefficient tail cannot be summed at radius 1
  degenerate,        // vanishing denominator (f = 0, d/dtheta f = 0, h' = 0, ...)
  no_root,
  multiple_roots,
  bracket_failure,
  not_converged,
  holds_to_limit,    // empirical search found no failure below 1 - 1e-3
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// `{"code": "...", "message": "..."}`
  std::string to_json() const;

 private:
  ErrorCode code_;
};

}  // namespace harmonica
