#include "superalg/errors.hpp"

namespace superalg {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ParityPatternViolation: return "ParityPatternViolation";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::NotADerivation: return "NotADerivation";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NotSupercommutative: return "NotSupercommutative";
        case ErrorCode::WrongParity: return "WrongParity";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::NotCoboundary: return "NotCoboundary";
        case ErrorCode::ZeroLambda: return "ZeroLambda";
        case ErrorCode::EmptyCenter: return "EmptyCenter";
        case ErrorCode::EmptyBase: return "EmptyBase";
        case ErrorCode::IrrationalSpectrum: return "IrrationalSpectrum";
        case ErrorCode::UnsupportedParities: return "UnsupportedParities";
        case ErrorCode::ZeroEigenvalue: return "ZeroEigenvalue";
        case ErrorCode::StabilityViolated: return "StabilityViolated";
        case ErrorCode::EmptyCenterInFactors: return "EmptyCenterInFactors";
        case ErrorCode::UnknownEntry: return "UnknownEntry";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::RoundTripFailed: return "RoundTripFailed";
    }
    return "Unknown";
}

}  // namespace superalg
