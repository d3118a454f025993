#include "hoggatt/error.hpp"

namespace hoggatt {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::NegativeN: return "NegativeN";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::PoleEncountered: return "PoleEncountered";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

} // namespace hoggatt
