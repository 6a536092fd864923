#ifndef GAPSIT_ERRORS_HPP
#define GAPSIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gapsit {

enum class ErrorCode {
    Ok = 0,
    Validation,
    Pole,
    Edge,
    OutOfGap,
    OutOfBand,
    Range,
    Resonance,
    NoConvergence,
    NoSignChange,
    SingularJacobian,
    BandEscape,
    Mapping,
    NcViolation,
    ZeroVelocity,
    DerivativeOverflow,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Base of all library errors; carries a stable code for the C layer.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

#define GAPSIT_DEFINE_ERROR(Name, Code)                       \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& msg)                 \
            : Error(ErrorCode::Code, msg) {}                  \
    }

GAPSIT_DEFINE_ERROR(ValidationError, Validation);
GAPSIT_DEFINE_ERROR(PoleError, Pole);
GAPSIT_DEFINE_ERROR(EdgeError, Edge);
GAPSIT_DEFINE_ERROR(OutOfGapError, OutOfGap);
GAPSIT_DEFINE_ERROR(OutOfBandError, OutOfBand);
GAPSIT_DEFINE_ERROR(RangeError, Range);
GAPSIT_DEFINE_ERROR(ResonanceError, Resonance);
GAPSIT_DEFINE_ERROR(NoConvergenceError, NoConvergence);
GAPSIT_DEFINE_ERROR(NoSignChangeError, NoSignChange);
GAPSIT_DEFINE_ERROR(SingularJacobianError, SingularJacobian);
GAPSIT_DEFINE_ERROR(BandEscapeError, BandEscape);
GAPSIT_DEFINE_ERROR(MappingError, Mapping);
GAPSIT_DEFINE_ERROR(NcViolationError, NcViolation);
GAPSIT_DEFINE_ERROR(ZeroVelocityError, ZeroVelocity);
GAPSIT_DEFINE_ERROR(DerivativeOverflowError, DerivativeOverflow);

#undef GAPSIT_DEFINE_ERROR

} // namespace gapsit

#endif
