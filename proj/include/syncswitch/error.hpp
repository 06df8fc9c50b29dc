#pragma once

#include <stdexcept>
#include <string>

namespace syncswitch {

// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input text (DFA files, words). The CLI maps these to a usage error.
class ParseError : public Error {
 public:
  enum class Kind { MalformedHeader, WrongRowCount, OutOfRange, MalformedRow, MalformedWord };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class NotSynchronizing : public Error {
 public:
  NotSynchronizing() : Error("not synchronizing") {}
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class CountOverflow : public Error {
 public:
  CountOverflow() : Error("optimal word count exceeds 64-bit counter") {}
};

// Raised when an exhaustive search would exceed its configured size guard.
class SearchGuard : public Error {
 public:
  using Error::Error;
};

// Raised when n exceeds the configured StateSet width.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace syncswitch
