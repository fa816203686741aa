#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzdir {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown state or letter, degree out of
/// range, alphabet mismatch and similar.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in an automaton file, with a 1-based location.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The merge-based D3 decider and the mu-chain only apply to complete automata.
class IncompleteAutomaton : public InputError {
 public:
  IncompleteAutomaton() : InputError("automaton not complete") {}
};

/// A lazily built recognizer reached the configured state cap.
class StateCapExceeded : public Error {
 public:
  explicit StateCapExceeded(std::size_t cap)
      : Error("recognizer state cap of " + std::to_string(cap) + " states exceeded"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An operation was called on an automaton that does not satisfy its stated
/// precondition (for example a trap-state check on a non-directable automaton).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzdir
