#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rso {

/// Base of every error raised by the library. The CLI maps any rso::Error
/// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument lies outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run above its enumeration guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed to converge.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Random graph sampling exhausted its attempt cap.
class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace rso
