#pragma once

#include <stdexcept>
#include <string>

namespace ecq {

enum class ErrorCode {
    ZeroInput,
    DomainError,
    SingularCurve,
    DegenerateParameter,
    PointNotOnCurve,
    NoSolution,
    InvalidArgument,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the core library carries one of the codes above;
/// the C API maps them onto status values one-to-one.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ecq
