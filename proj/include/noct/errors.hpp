#pragma once

#include <stdexcept>
#include <string>

namespace noct {

// Exit codes surfaced by the CLI: 2 input, 3 io, 4 domain precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Malformed or inconsistent input data (bad dimensions, missing fields).
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// An enumeration would exceed its documented size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class IoError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A mathematical precondition fails (class not big, not pseudoeffective, ...).
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

/// Indicates an invalid model rather than a caller mistake.
class InternalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

}  // namespace noct
