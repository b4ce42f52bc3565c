#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

struct ConductorMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("division by zero") {}
};

// Raised when a parameter value sits on a pole of a rational expression
// (zeta denominators, e_factor denominators, ...).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised by the intertwiner build when an E(k) block is not invertible.
struct SingularParameter : std::domain_error {
    int degree;
    explicit SingularParameter(int d)
        : std::domain_error("singular parameter: E(k) block not invertible at degree " +
                            std::to_string(d)),
          degree(d) {}
};

// A precondition of a verifier or constructor does not hold.
struct HypothesisViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

// An internal identity that must hold by theorem failed: implementation bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace dunkl
