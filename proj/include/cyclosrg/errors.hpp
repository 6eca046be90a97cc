#pragma once

#include <stdexcept>
#include <string>

namespace cyclosrg {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter that must be prime is not.
struct NonPrimeError : Error {
    using Error::Error;
};

/// p^f exceeds the width supported by the exact field representation.
struct DegreeTooLargeError : Error {
    using Error::Error;
};

/// A full multiplicative-group enumeration would exceed the configured cap.
struct CapExceededError : Error {
    using Error::Error;
};

/// N does not divide q - 1.
struct NotDivisorError : Error {
    using Error::Error;
};

/// Exact Gauss-sum computation is only supported for m = 1.
struct UnsupportedMError : Error {
    using Error::Error;
};

/// gcd(a, n) != 1 where a unit was required.
struct NotCoprimeError : Error {
    using Error::Error;
};

/// A period product K_t failed to reduce to a rational constant.
struct NotRationalError : Error {
    using Error::Error;
};

/// A Gauss sum kept xi_p-dependence after reduction, so it does not lie in
/// the decomposition field K.
struct NotInKError : Error {
    using Error::Error;
};

/// The xi_{p1}-part of a Gauss sum is not an integer combination of the
/// Gauss periods eta_j.
struct NotInPeriodBasisError : Error {
    using Error::Error;
};

/// f - ftilde turned out odd, so r = (f - ftilde)/2 + b is undefined.
struct ParityViolationError : Error {
    using Error::Error;
};

/// A claimed two-eigenvalue spectrum has non-integral or negative
/// multiplicities and therefore belongs to no strongly regular graph.
struct InconsistentSpectrumError : Error {
    using Error::Error;
};

/// A Gauss period failed the equal-count test and is not a rational integer;
/// this signals violated hypotheses (or a bug upstream).
struct NonIntegralPeriodError : Error {
    using Error::Error;
};

/// A condition that is mathematically forced under the standing hypotheses
/// failed; always a bug, never a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cyclosrg
