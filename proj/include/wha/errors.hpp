#pragma once

#include <stdexcept>
#include <string>

namespace wha {

enum class ErrorKind {
    DimensionMismatch,
    NilpotentInput,
    NumericallyIndistinct,
    NoAntipode,
    AntipodeNotUnique,
    NotInvertible,
    InvalidGroupoid,
    ParseError,
    AxiomViolation,
    DegenerateIntegral,
    NotConnected,
    EquivalenceViolated,
    NotIntegral,
    NotSemisimple,
    NotPseudoUnitary,
    NotPivotal,
    Decomposable,
    NotSemisimpleM,
    InvalidParams,
    SizeLimit,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NilpotentInput: return "NilpotentInput";
        case ErrorKind::NumericallyIndistinct: return "NumericallyIndistinct";
        case ErrorKind::NoAntipode: return "NoAntipode";
        case ErrorKind::AntipodeNotUnique: return "AntipodeNotUnique";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidGroupoid: return "InvalidGroupoid";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::DegenerateIntegral: return "DegenerateIntegral";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::EquivalenceViolated: return "EquivalenceViolated";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::NotPseudoUnitary: return "NotPseudoUnitary";
        case ErrorKind::NotPivotal: return "NotPivotal";
        case ErrorKind::Decomposable: return "Decomposable";
        case ErrorKind::NotSemisimpleM: return "NotSemisimpleM";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Process exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 internal equivalence violation (bug class).
inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidParams:
        case ErrorKind::InvalidGroupoid:
        case ErrorKind::AxiomViolation:
        case ErrorKind::SizeLimit:
        case ErrorKind::DimensionMismatch:
            return 2;
        case ErrorKind::EquivalenceViolated:
        case ErrorKind::Internal:
            return 3;
        default:
            return 1;
    }
}

}  // namespace wha
