#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ptw {

// Malformed or structurally invalid input (maps to CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A graph failed validation; every violation names the offending item.
class GraphError : public InputError {
 public:
  explicit GraphError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A mathematical precondition does not hold (maps to CLI exit code 2).
class MathError : public std::runtime_error {
 public:
  MathError(const std::string& what, std::string witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace ptw
