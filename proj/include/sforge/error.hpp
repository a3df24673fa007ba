#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph file, bad polynomial text, invalid graph shape.
/// `line()` is 1-based; 0 means the problem is not tied to a single line.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The input is well formed but an operation's mathematical precondition fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMatrixError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotNegativeDefiniteError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised by splice and discriminant operations on graphs that are not
/// genus-0 negative-definite trees.
class NotQhsTreeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotMinimalRepresentableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SemigroupFailureError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Splice equations cannot be built; `node()` / `edge()` name the culprit when known.
class EquationsRefusal : public PreconditionError {
 public:
  EquationsRefusal(const std::string& what, std::string node = {}, std::string edge = {})
      : PreconditionError(what), node_(std::move(node)), edge_(std::move(edge)) {}

  const std::string& node() const noexcept { return node_; }
  const std::string& edge() const noexcept { return edge_; }

 private:
  std::string node_;
  std::string edge_;
};

}  // namespace sforge
