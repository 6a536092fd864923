#include "errors.hpp"

namespace gapsit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::Validation: return "Validation";
        case ErrorCode::Pole: return "Pole";
        case ErrorCode::Edge: return "Edge";
        case ErrorCode::OutOfGap: return "OutOfGap";
        case ErrorCode::OutOfBand: return "OutOfBand";
        case ErrorCode::Range: return "Range";
        case ErrorCode::Resonance: return "Resonance";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::SingularJacobian: return "SingularJacobian";
        case ErrorCode::BandEscape: return "BandEscape";
        case ErrorCode::Mapping: return "Mapping";
        case ErrorCode::NcViolation: return "NcViolation";
        case ErrorCode::ZeroVelocity: return "ZeroVelocity";
        case ErrorCode::DerivativeOverflow: return "DerivativeOverflow";
        case ErrorCode::Internal: return "Internal";
    }
    return "?";
}

} // namespace gapsit
