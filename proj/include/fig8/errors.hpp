#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fig8 {

enum class ErrorCode {
    Overflow,
    SingularMatrix,
    DegenerateLeadingCoefficient,
    DimensionMismatch,
    InvalidComplex,
    NotAcyclic,
    ParseError,
    SingularParameter,
    OffVariety,
    DegenerateU,
    NoConvergence,
    InvalidSlope,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Base for every error raised by the library. Callers that only need the
/// category can switch on code(); tests usually catch the concrete alias.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

template <ErrorCode C>
class ErrorOf : public Error {
public:
    explicit ErrorOf(const std::string& what) : Error(C, what) {}
};

using OverflowError = ErrorOf<ErrorCode::Overflow>;
using SingularMatrix = ErrorOf<ErrorCode::SingularMatrix>;
using DegenerateLeadingCoefficient = ErrorOf<ErrorCode::DegenerateLeadingCoefficient>;
using DimensionMismatch = ErrorOf<ErrorCode::DimensionMismatch>;
using InvalidComplex = ErrorOf<ErrorCode::InvalidComplex>;
using NotAcyclic = ErrorOf<ErrorCode::NotAcyclic>;
using ParseError = ErrorOf<ErrorCode::ParseError>;
using SingularParameter = ErrorOf<ErrorCode::SingularParameter>;
using OffVariety = ErrorOf<ErrorCode::OffVariety>;
using DegenerateU = ErrorOf<ErrorCode::DegenerateU>;
using NoConvergence = ErrorOf<ErrorCode::NoConvergence>;
using InvalidSlope = ErrorOf<ErrorCode::InvalidSlope>;

inline std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::OffVariety: return "OffVariety";
    case ErrorCode::DegenerateU: return "DegenerateU";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidSlope: return "InvalidSlope";
    }
    return "Unknown";
}

} // namespace fig8
