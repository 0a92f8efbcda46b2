#pragma once

#include <stdexcept>
#include <string>

namespace halfgenus {

/// Base class for every error the library throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integer argument outside the supported range.
struct RangeError : Error {
  using Error::Error;
};

/// Modulus of a residue symbol is not of the required shape (odd, prime, ...).
struct InvalidModulusError : Error {
  using Error::Error;
};

/// Valuation of zero requested.
struct UndefinedValuationError : Error {
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

/// Discriminant not congruent to 0 or 1 mod 4, or not negative where required.
struct InvalidDiscriminantError : Error {
  using Error::Error;
};

/// Value could not be factored over the supported prime support.
struct FactorizationError : Error {
  using Error::Error;
};

/// A documented precondition failed; the message names the failed hypothesis.
struct PreconditionError : Error {
  using Error::Error;
};

/// Caller picked the wrong routine for this input (e.g. bad prime at a witness search).
struct WrongRoutineError : Error {
  using Error::Error;
};

/// A witness search or re-verification failed; the message names the place.
struct VerificationError : Error {
  using Error::Error;
};

/// The input is not a counterexample: a global solution or an unobstructed row exists.
struct CounterexampleRefutedError : Error {
  using Error::Error;
};

/// Malformed certificate or signature text.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace halfgenus
