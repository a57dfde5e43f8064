#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: graph text, word text, rational expression.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A word or vertex set mentions something the context does not know.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested operation needs a clean (or right-angled) graph.
class UnsupportedContext : public Error {
 public:
  using Error::Error;
};

/// decompose() was handed a graph containing a forbidden induced subgraph.
class PoisonousGraph : public UnsupportedContext {
 public:
  using UnsupportedContext::UnsupportedContext;
};

/// A witness pair whose support exceeds two vertices.
class UnsupportedVerification : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Always a bug, never a user error.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
