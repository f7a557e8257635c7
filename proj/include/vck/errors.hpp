#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vck {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct RangeError : Error {
    using Error::Error;
};

struct ContractError : Error {
    using Error::Error;
};

struct ModelError : Error {
    using Error::Error;
};

// Raised by a kernel or reduction when its documented precondition does not hold,
// e.g. the supplied set is not a vertex cover.
struct PreconditionError : Error {
    using Error::Error;
};

// Oracles refuse rather than run for an unbounded amount of time.
struct CeilingExceeded : Error {
    using Error::Error;
};

struct PropertyError : Error {
    using Error::Error;
};

// Instances handed to a composer do not share the same shape.
struct ClassError : Error {
    using Error::Error;
};

struct InputError : Error {
    using Error::Error;
};

}  // namespace vck
