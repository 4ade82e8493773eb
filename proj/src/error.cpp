#include "harmonica/error.hpp"

#include <json.hpp>

namespace harmonica {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::radius_guard: return "radius_guard";
    case ErrorCode::tail_bound: return "tail_bound";
    case ErrorCode::unbounded_tail: return "unbounded_tail";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::no_root: return "no_root";
    case ErrorCode::multiple_roots: return "multiple_roots";
    case ErrorCode::bracket_failure: return "bracket_failure";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::holds_to_limit: return "holds_to_limit";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

std::string Error::to_json() const {
  nlohmann::ordered_json j;
  j["code"] = std::string(to_string(code_));
  j["message"] = what();
  return j.dump();
}

}  // namespace harmonica
