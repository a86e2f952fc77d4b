#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spin4 {

enum class ErrorCode {
    NotSquare,
    NonSymmetric,
    DimensionMismatch,
    NotAnIsometry,
    InvalidSelfIntersection,
    WrongSquare,
    LatticeMismatch,
    OrderExceedsCap,
    NotInvolution,
    NotEven,
    OddSignature,
    DegenerateFixedForm,
    HypothesisViolated,
    SingularDenominator,
    NonIntegralResult,
    BadParameters,
    EmptyManifest,
    ParseError,
    SchemaError,
    RangeError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::InvalidSelfIntersection: return "InvalidSelfIntersection";
    case ErrorCode::WrongSquare: return "WrongSquare";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::OddSignature: return "OddSignature";
    case ErrorCode::DegenerateFixedForm: return "DegenerateFixedForm";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::EmptyManifest: return "EmptyManifest";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RangeError: return "RangeError";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` is the
/// stable machine-readable part, `what()` carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace spin4
