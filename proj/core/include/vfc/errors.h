#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller broke a documented precondition (bad vertex id, bad depth, d* < 1).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// More distinct failed vertices than the structure was preprocessed for.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t requested, int budget)
      : Error("failure set of size " + std::to_string(requested) +
              " exceeds budget d*=" + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}
  std::size_t requested() const { return requested_; }
  int budget() const { return budget_; }

 private:
  std::size_t requested_;
  int budget_;
};

class QueryOnFailedVertex : public Error {
 public:
  using Error::Error;
};

// Corrupt, truncated or incompatible serialized index.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace vfc
