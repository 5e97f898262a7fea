#pragma once

#include <stdexcept>
#include <string>

namespace dks {

// Precondition on an argument failed (bad modulus, zero divisor, wrong group).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A SumContext could not be built from the supplied characters.
class ValidationError : public std::invalid_argument {
public:
  enum class Kind { Modulus, Imprimitive, Parity };

  ValidationError(Kind kind, const std::string& what)
    : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

// A field element was asked for its rational value but has irrational part.
class NotRationalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (labels, matrices, rationals).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An invariant that the mathematics guarantees was found broken.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Image lattice rank came out below the field degree.
class TheoremViolation : public InternalError {
public:
  using InternalError::InternalError;
};

// Output could not be written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unknown command-level option such as a verify suite name.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace dks
