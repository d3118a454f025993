#ifndef HOGGATT_ERROR_HPP
#define HOGGATT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hoggatt {

enum class ErrorCode {
    InvalidArgument,
    Domain,
    NegativeN,
    ZeroDenominator,
    TooLarge,
    TruncationTooShort,
    DegreeOverflow,
    DuplicateAbscissa,
    NotPalindromic,
    PoleEncountered,
    Parse,
    Io,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.  Mathematical
/// *results* (an identity that does not hold) are never thrown; they are
/// returned as verification reports.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

} // namespace hoggatt

#endif
