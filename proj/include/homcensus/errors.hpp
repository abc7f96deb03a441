#pragma once

#include <stdexcept>
#include <string>

namespace homcensus {

// All library errors carry a short machine-readable code ("NotPrime",
// "TooLarge", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Rejected input: bad field order, parity mismatch, dimension mismatch, ...
// CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Work refused by a feasibility guard (code "TooLarge"). CLI exit code 3.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

// A broken internal invariant, e.g. an inexact division that must be exact.
// CLI exit code 4.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace homcensus
