#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimalg {

/// Base of every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text: expression syntax, literals, JSON shape.
/// CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

/// Operator applied to operands of incompatible kinds. CLI exit code 2.
struct KindError : ParseError {
    using ParseError::ParseError;
};

/// A precondition violation on otherwise well-formed data (negative-infinite
/// degree realization, zero-group argument where forbidden, value out of a
/// required range). CLI exit code 1.
struct DomainError : Error {
    using Error::Error;
};

/// One failed pattern axiom. prime is empty for the default (generic) triple.
struct AxiomViolation {
    std::optional<std::int64_t> prime;
    int axiom = 0; // 1..6
};

std::string describe(const AxiomViolation& v);

/// A pattern that fails the Bockstein-function axioms. CLI exit code 1.
struct ValidationError : DomainError {
    ValidationError(std::string msg, std::vector<AxiomViolation> vs)
        : DomainError(std::move(msg)), violations(std::move(vs)) {}
    std::vector<AxiomViolation> violations;
};

/// A condition the library's own theorems rule out: an operation on valid
/// inputs produced an invalid result, or two routes that must agree did not.
/// Never silently clamped; always surfaced.
struct InternalError : Error {
    using Error::Error;
};

} // namespace dimalg
