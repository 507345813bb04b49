#pragma once

#include <stdexcept>
#include <string>

namespace coprod {

/// Base of every error the library throws. `exit_code()` is the CLI status
/// the error maps to (2 validation, 3 pipeline, 4 verification).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual int exit_code() const noexcept { return 3; }
};

/// Malformed or inconsistent input: bad tables, bad words, bad JSON.
class ValidationError : public Error {
public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 2; }
};

/// Exact-arithmetic domain failures (division by zero, singular matrix,
/// forbidden modulus).
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// The construction could not complete (faithfulness collision, exhausted
/// retries, enumeration budget).
class PipelineError : public Error {
public:
    using Error::Error;
};

/// A certificate failed replay.
class VerificationError : public Error {
public:
    using Error::Error;
    [[nodiscard]] int exit_code() const noexcept override { return 4; }
};

}  // namespace coprod
