#pragma once

#include <stdexcept>
#include <string>

namespace rdnf {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (p outside (0,1),
// k outside [0,n], mismatched dimensions, non-neighbor join, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A dimension exceeds the cap of an enumeration-bearing operation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed truth-table or interval text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdnf
