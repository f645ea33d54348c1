#pragma once

#include <stdexcept>
#include <string>

namespace plankm {

enum class ErrorCode {
    InvalidArgument,
    NonPlanarRotation,
    DuplicateEdge,
    Disconnected,
    InfiniteLength,
    Unreachable,
    BudgetExceeded,
    Infeasible,
    CannotTriangulate,
    BadFormat,
};

/// All hard failures surface as this exception; the code identifies the
/// failure class so callers (and tests) can match on it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace plankm
