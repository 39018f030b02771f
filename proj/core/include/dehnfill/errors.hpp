#pragma once

#include <stdexcept>
#include <string>

namespace dehnfill {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition was violated (pole, zero polynomial, rank mismatch, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A sound procedure ran out of its refinement budget. Never a wrong answer,
/// only a refusal to answer.
struct UndecidedError : Error {
  using Error::Error;
};

/// A glued complex failed a structural consistency condition.
struct StructuralError : Error {
  using Error::Error;
};

/// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace dehnfill
