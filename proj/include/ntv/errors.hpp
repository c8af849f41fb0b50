#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntv {

// Base of every library error. The CLI maps all of these to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested range exceeds the sieve range cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Precondition on a numeric argument violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid data (ordering, monotonicity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Query beyond the height covered by a zero table.
class HorizonError : public Error {
 public:
  using Error::Error;
};

// Checkpoint table does not cover a requested point.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Threshold solver found no solution inside its search range.
class SolverRangeError : public Error {
 public:
  using Error::Error;
};

// Decomposition search ran out of candidates.
class ExhaustionError : public Error {
 public:
  ExhaustionError(const std::string& what, std::uint64_t n) : Error(what), n_(n) {}
  std::uint64_t n() const noexcept { return n_; }

 private:
  std::uint64_t n_;
};

}  // namespace ntv
