#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctlenum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Formula or model text that does not conform to its grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected,
             const std::string& found)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": expected " + expected + ", found " +
              found),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Malformed model or digraph input (duplicate ids, dangling edges, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class UnknownWorld : public Error {
 public:
  using Error::Error;
};

class RootDeleted : public Error {
 public:
  RootDeleted() : Error("deletion set contains the root world") {}
};

/// A rewrite was requested for a formula whose root it does not match.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotAFAGChain : public Error {
 public:
  using Error::Error;
};

class UnmappedAtom : public Error {
 public:
  using Error::Error;
};

class NotNNF : public Error {
 public:
  using Error::Error;
};

class PartialAssignment : public Error {
 public:
  using Error::Error;
};

/// A fragment-specific oracle was applied to a formula outside its fragment.
class FragmentMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NoWitness : public Error {
 public:
  using Error::Error;
};

/// Violated precondition that has no dedicated error type.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctlenum
