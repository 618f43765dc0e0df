#ifndef TILTVER_ERRORS_HPP
#define TILTVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tiltver {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedTypeError : Error {
    using Error::Error;
};

/// Mixing characters or weights from different root data.
struct DatumMismatchError : Error {
    using Error::Error;
};

struct NotDominantError : Error {
    using Error::Error;
};

/// Exact division left a nonzero remainder.  For module characters divided
/// by the Steinberg character this is a structural red flag, not a bug.
struct NotDivisibleError : Error {
    using Error::Error;
};

struct NotInvariantError : Error {
    using Error::Error;
};

/// The Jantzen-sum solver could not pin a composition multiplicity and no
/// override row was supplied.  Carries the ambiguous weight in the message.
struct UnderdeterminedError : Error {
    explicit UnderdeterminedError(const std::string& msg, std::string lambda = {},
                                  std::string ambiguous = {})
        : Error(msg), lambda_str(std::move(lambda)), ambiguous_str(std::move(ambiguous)) {}
    std::string lambda_str;
    std::string ambiguous_str;
};

/// Highest-weight elimination produced a negative multiplicity: the input
/// character is not a nonnegative combination of the basis, which signals
/// inconsistent input or bad override data.
struct NegativeMultiplicityError : Error {
    using Error::Error;
};

struct MalformedOverrideError : Error {
    using Error::Error;
};

struct LinkageViolationError : Error {
    using Error::Error;
};

/// No strategy produced the requested tilting character; the message names
/// the table row that would unblock the computation.
struct TiltingDataMissingError : Error {
    explicit TiltingDataMissingError(const std::string& msg, std::string nu = {})
        : Error(msg), nu_str(std::move(nu)) {}
    std::string nu_str;
};

struct ConfigError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace tiltver

#endif
