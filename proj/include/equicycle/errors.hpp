#pragma once

#include <chrono>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace equicycle {

// Unsupported (l, v, ...) combinations.  Messages name the violated
// congruence so the CLI can surface them verbatim (exit code 2).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A backtracking search ran out of budget before producing a verified
// result.  Never carries a partial answer (exit code 3).
struct search_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction's internal audit failed: the code is wrong, not the input.
struct audit_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Wall-clock deadline shared by all searches in this process, taken from
// EQUICYCLE_BUDGET_MS at first use (unset or unparsable -> no deadline).
// Searches poll deadline_exceeded() between restarts, not per node.
inline std::optional<std::chrono::steady_clock::time_point> search_deadline() {
  static const std::optional<std::chrono::steady_clock::time_point> deadline = [] {
    std::optional<std::chrono::steady_clock::time_point> d;
    if (const char* ms = std::getenv("EQUICYCLE_BUDGET_MS")) {
      char* end = nullptr;
      long v = std::strtol(ms, &end, 10);
      if (end != ms && v > 0) d = std::chrono::steady_clock::now() + std::chrono::milliseconds(v);
    }
    return d;
  }();
  return deadline;
}

inline bool deadline_exceeded() {
  auto d = search_deadline();
  return d && std::chrono::steady_clock::now() > *d;
}

}  // namespace equicycle
