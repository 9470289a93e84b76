#ifndef GIC_ERRORS_HPP
#define GIC_ERRORS_HPP

#include <stdexcept>

namespace gic {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A symmetric-channel-only operation received asymmetric parameters.
struct UnsupportedConfigError : Error {
    using Error::Error;
};

/// Observation covariance is singular or too ill-conditioned to evaluate.
struct DegenerateObservationError : Error {
    using Error::Error;
};

/// Genie fails the usefulness hypothesis; the requested value would not be a
/// proven bound.
struct InvalidCertificateError : Error {
    using Error::Error;
};

/// Two coincident points define no line.
struct DegenerateLineError : Error {
    using Error::Error;
};

/// No useful-region boundary point exists at the requested angle.
struct NoBoundaryError : Error {
    using Error::Error;
};

/// Input violates a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace gic

#endif  // GIC_ERRORS_HPP
