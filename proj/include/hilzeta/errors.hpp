#ifndef HILZETA_ERRORS_HPP
#define HILZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilzeta {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: out-of-domain arguments, malformed configuration, broken invariants of user data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// E(X_K) is not a positive even integer for the supplied elliptic data.
class ParityViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// File could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (non-convergence, overflow, internal consistency).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace hilzeta

#endif  // HILZETA_ERRORS_HPP
