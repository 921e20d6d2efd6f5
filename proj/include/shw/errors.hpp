#pragma once

#include <stdexcept>
#include <string>

namespace shw {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// InputError -> 2, UnsupportedError -> 3, CapError -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (bad JSON, invalid group table, ...).
struct InputError : Error {
    using Error::Error;
};

// Mathematically unsupported combination of arguments.
struct UnsupportedError : Error {
    using Error::Error;
};

// A size or degree cap was exceeded.
struct CapError : Error {
    using Error::Error;
};

struct ContainmentViolation : InputError {
    using InputError::InputError;
};
struct RingMismatch : InputError {
    using InputError::InputError;
};
struct CharMismatch : InputError {
    using InputError::InputError;
};
struct InvalidAction : InputError {
    using InputError::InputError;
};
struct TableIncomplete : InputError {
    using InputError::InputError;
};
struct Undecidable : InputError {
    using InputError::InputError;
};
struct NotEventuallyConstant : InputError {
    using InputError::InputError;
};

struct NotSimplyConnected : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};
struct CharPositive : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};
struct TorsionNotSupported : UnsupportedError {
    using UnsupportedError::UnsupportedError;
};

struct DimCapExceeded : CapError {
    using CapError::CapError;
};
struct RangeExceeded : CapError {
    using CapError::CapError;
};
struct SearchTooLarge : CapError {
    using CapError::CapError;
};
struct LengthTooLarge : CapError {
    using CapError::CapError;
};
struct MatrixCapExceeded : CapError {
    using CapError::CapError;
};

}  // namespace shw
