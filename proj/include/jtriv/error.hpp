#ifndef JTRIV_ERROR_HPP_
#define JTRIV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace jtriv {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A configured size guard was exceeded (closure cap, filtration cap, ...).
  class GuardError : public Error {
   public:
    using Error::Error;
  };

  // The input violates a documented precondition.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  // An internal assertion or mathematical property check failed.
  class PropertyFailure : public Error {
   public:
    using Error::Error;
  };

}  // namespace jtriv

#endif  // JTRIV_ERROR_HPP_
