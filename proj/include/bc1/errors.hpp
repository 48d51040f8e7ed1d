#pragma once

#include <stdexcept>
#include <string>

namespace bc1 {

/// An exact division left a remainder. On the documented domains this
/// cannot happen, so it signals a logic error or a contract violation
/// by the caller.
struct NonDivisible : std::runtime_error {
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

/// Operation invoked on an engine/multiplicity in the wrong mode
/// (exact-only operation on a float-mode multiplicity or vice versa).
struct ModeError : std::runtime_error {
    explicit ModeError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a structural precondition (invariance, parity,
/// unsupported scale).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : DomainError {
    explicit NotInvariant(const std::string& what) : DomainError(what) {}
};

struct ParameterOutOfRange : std::runtime_error {
    explicit ParameterOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// A Gram-Schmidt self-pairing vanished; cannot happen for admissible
/// multiplicities.
struct DegenerateGram : std::runtime_error {
    explicit DegenerateGram(const std::string& what) : std::runtime_error(what) {}
};

/// No scalar prefactor reconciles the classical-Jacobi decomposition with
/// the orthogonal family.
struct DecompositionMismatch : std::runtime_error {
    explicit DecompositionMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bc1
