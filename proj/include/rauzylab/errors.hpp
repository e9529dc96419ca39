// Exception types thrown by rauzylab.

#ifndef RAUZYLAB_ERRORS_HPP_
#define RAUZYLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rauzylab {

  //! Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A substitution rule is malformed (empty image, bad probability vector,
  //! m = 0 for a noble means rule, ...).
  class InvalidRule : public Error {
   public:
    using Error::Error;
  };

  //! A word contains a letter outside the alphabet, or is empty where a
  //! nonempty word is required.
  class InvalidWord : public Error {
   public:
    using Error::Error;
  };

  //! An operation needs data the rule does not carry (e.g. sampling without
  //! probabilities).
  class ConfigurationError : public Error {
   public:
    using Error::Error;
  };

  //! The generation cap was reached before a factor set stabilized.
  class NonConvergence : public Error {
   public:
    using Error::Error;
  };

  //! An argument is outside the domain of an operation.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! A structural identity that must hold failed. Seeing this means a bug or
  //! a falsified mathematical claim, never a recoverable state.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

}  // namespace rauzylab

#endif  // RAUZYLAB_ERRORS_HPP_
