#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "nextsp/types.hpp"

namespace nsp {

// Raised when a graph mutation would break the simple positive-weight invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed; always a bug, never an input condition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidPath : public std::invalid_argument {
 public:
  InvalidPath(Vertex tail, Vertex head)
      : std::invalid_argument("missing edge (" + std::to_string(tail) + "," +
                              std::to_string(head) + ")"),
        tail_(tail),
        head_(head) {}

  Vertex tail() const noexcept { return tail_; }
  Vertex head() const noexcept { return head_; }

 private:
  Vertex tail_;
  Vertex head_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("path budget of " + std::to_string(budget) + " exceeded") {}
};

}  // namespace nsp
