#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Diagnostic categories surfaced by the CLI as distinct exit conditions.
enum class ErrorCode {
    Generic,
    RingMismatch,
    Capability,      // operation requires euclidean/groebner/field capability
    Dimension,
    Parse,
    UnknownBinding,
    TypeMismatch,
    BudgetExceeded,
    Internal,        // broken invariant, e.g. an invalid exactness certificate
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    explicit Error(const std::string& msg) : Error(ErrorCode::Generic, msg) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) raise(code, msg);
}

}  // namespace halg
