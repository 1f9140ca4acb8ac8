#pragma once

#include <stdexcept>
#include <string>

namespace conics {

enum class ErrorCode {
    DegenerateInput,
    CommonFactor,
    WrongDegree,
    BasePointMissing,
    IrrationalBasePoint,
    Degenerate,
    DegreeTooSmall,
    NotCoprime,
    DegreeMismatch,
    NotReduced,
    OddDegree,
    NoLinearSyzygyViolated,
    NotInKernel,
    CurveParameterizableByLines,
    InverseMismatch,
    NotBirational,
    Contracted,
    NoCurve,
    NotProperOrWrongDegree,
    BadPrime,
    NotDivisible,
    ParseError,
    PreconditionViolated,
    Internal,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::CommonFactor: return "CommonFactor";
        case ErrorCode::WrongDegree: return "WrongDegree";
        case ErrorCode::BasePointMissing: return "BasePointMissing";
        case ErrorCode::IrrationalBasePoint: return "IrrationalBasePoint";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::NoLinearSyzygyViolated: return "NoLinearSyzygyViolated";
        case ErrorCode::NotInKernel: return "NotInKernel";
        case ErrorCode::CurveParameterizableByLines: return "CurveParameterizableByLines";
        case ErrorCode::InverseMismatch: return "InverseMismatch";
        case ErrorCode::NotBirational: return "NotBirational";
        case ErrorCode::Contracted: return "Contracted";
        case ErrorCode::NoCurve: return "NoCurve";
        case ErrorCode::NotProperOrWrongDegree: return "NotProperOrWrongDegree";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, int column = -1)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), column_(column) {}
    ErrorCode code() const { return code_; }
    // 1-based column for parse errors, -1 otherwise.
    int column() const { return column_; }

private:
    ErrorCode code_;
    int column_;
};

}  // namespace conics
