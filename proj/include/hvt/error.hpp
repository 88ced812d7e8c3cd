#pragma once

#include <stdexcept>
#include <string>

namespace hvt {

enum class ErrorCode {
    parse = 1,
    validation,
    shape_mismatch,
    precondition,
    unreachable,
    limit,
    internal,
};

// Single exception type for the library; the C layer maps `code()` onto
// its status values.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

// Internal invariant check. Active in all build types.
inline void ensure(bool cond, const char *what) {
    if (!cond) throw Error(ErrorCode::internal, std::string("invariant violated: ") + what);
}

} // namespace hvt
