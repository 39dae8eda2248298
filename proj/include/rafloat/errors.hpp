#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rafloat {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result left the format's finite range (Overflow) or the operation has
/// no rational result at all (Invalid). Faults are contract outcomes, not
/// bugs; the differential oracle inspects their kind.
class RangeFault : public Error {
public:
    enum class Kind { Overflow, Invalid };

    RangeFault(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// An argument outside a function's guard domain, e.g. a non-representable
/// rational passed to fp_add.
class GuardViolation : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `position` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A recorded fact contradicts an existing one — the unsoundness signal.
class LedgerConflict : public Error {
public:
    using Error::Error;
};

/// A value with no binary64 bit pattern was passed to the encoder.
class EncodeError : public Error {
public:
    using Error::Error;
};

}  // namespace rafloat
