#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superalg {

enum class ErrorCode {
    DimensionMismatch,
    ParityPatternViolation,
    DegenerateForm,
    NotADerivation,
    NotInvertible,
    NotAssociative,
    NotSupercommutative,
    WrongParity,
    ConditionViolated,
    NotCoboundary,
    ZeroLambda,
    EmptyCenter,
    EmptyBase,
    IrrationalSpectrum,
    UnsupportedParities,
    ZeroEigenvalue,
    StabilityViolated,
    EmptyCenterInFactors,
    UnknownEntry,
    BadParams,
    ParseError,
    InvariantViolation,
    RoundTripFailed,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this exception; `code()` is the
// stable machine-readable part, `what()` carries the human detail.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
    throw AlgebraError(code, detail);
}

}  // namespace superalg
