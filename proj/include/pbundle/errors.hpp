#pragma once

#include <stdexcept>
#include <string>

namespace pbundle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments to library functions (negative genus, degree out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed group expressions or JSON input.
struct ParseError : Error {
    using Error::Error;
};

// Input declares cells above dimension 2.
struct DimensionError : Error {
    using Error::Error;
};

enum class ValidationCode {
    DuplicateLabel,
    DanglingReference,
    NonClosedWord,
    Disconnected,
    MissingBasepoint,
};

struct ValidationError : Error {
    ValidationError(ValidationCode c, const std::string& what) : Error(what), code(c) {}
    ValidationCode code;
};

struct DisconnectedError : ValidationError {
    explicit DisconnectedError(const std::string& what)
        : ValidationError(ValidationCode::Disconnected, what) {}
};

// A classification hypothesis does not hold; `flag` names the failed one
// and is embedded in the message for callers that only see what().
struct HypothesisViolation : Error {
    HypothesisViolation(std::string flag_, const std::string& what)
        : Error("hypothesis " + flag_ + " fails: " + what), flag(std::move(flag_)) {}
    std::string flag;
};

// Brute-force oracle refused: candidate space too large.
struct EnumerationLimitError : Error {
    using Error::Error;
};

// CLI misuse (maps to exit code 2).
struct UsageError : Error {
    using Error::Error;
};

} // namespace pbundle
