// Always-on invariant checking (independent of NDEBUG) and shared aliases.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rhact {

using Long = long long;

// Internal invariant violation: indicates a bug, not bad input.
inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error("internal check failed: " + msg);
}

// User-facing input problem.
[[noreturn]] inline void input_error(const std::string& msg) {
  throw std::runtime_error(msg);
}

}  // namespace rhact
