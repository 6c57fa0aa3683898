#pragma once

#include <stdexcept>
#include <string>

namespace gnq {

// Base class for all domain errors raised by the library.  Code paths that
// produce a *negative result* (NotIsomorphic, a failed filter, ...) return
// result types instead; exceptions are reserved for contract violations.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConductorMismatch : Error {
    using Error::Error;
};
struct MixedFieldError : Error {
    using Error::Error;
};
struct OverflowError : Error {
    using Error::Error;
};
struct MalformedTensor : Error {
    using Error::Error;
};
struct NotAGroup : Error {
    using Error::Error;
};
struct NotGeneralizedNearGroup : Error {
    using Error::Error;
};
struct GradingInconsistent : Error {
    using Error::Error;
};
struct ExactUnavailable : Error {
    using Error::Error;
};
struct UnknownName : Error {
    using Error::Error;
};
struct NotQuadratic : Error {
    using Error::Error;
};
struct NotIsotropic : Error {
    using Error::Error;
};
struct IllDefined : Error {
    using Error::Error;
};
struct InvalidSubgroup : Error {
    using Error::Error;
};
struct NotACharacter : Error {
    using Error::Error;
};
struct SphericalityViolation : Error {
    using Error::Error;
};
struct RationalDimension : Error {
    using Error::Error;
};
struct RationalGlobalDimension : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct AxiomError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace gnq
