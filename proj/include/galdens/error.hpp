#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galdens {

enum class ErrorCode {
    InvalidArgument,
    InvalidGroup,
    BoundExceeded,
    GroupMismatch,
    NotSurjective,
    MismatchedTargets,
    NoSuitablePrime,
    NoAdmissibleShift,
    TooSmallEpsilon,
    BadReduction,
    NoGoodPrimes,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that the CLI can surface it with context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace galdens
