#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlattice {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The order relation contains a cycle; `cycle` lists the ids along it.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<std::size_t> cycle)
      : Error(what), cycle_(std::move(cycle)) {}
  const std::vector<std::size_t>& cycle() const { return cycle_; }

 private:
  std::vector<std::size_t> cycle_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotPermutationError : public Error {
 public:
  using Error::Error;
};

class ComparableError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class PositionError : public Error {
 public:
  using Error::Error;
};

class NotFiniteError : public Error {
 public:
  using Error::Error;
};

class NotPositionInvariantError : public Error {
 public:
  using Error::Error;
};

class NotCancellativeError : public Error {
 public:
  using Error::Error;
};

class UnboundRelation : public Error {
 public:
  using Error::Error;
};

/// A solver hit a configured cap before reaching an answer.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// Syntax or document error. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)
                   : what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordlattice
