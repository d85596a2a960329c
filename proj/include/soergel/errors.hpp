#pragma once

#include <stdexcept>
#include <string>

namespace soergel {

/// Malformed text or an ill-typed expression. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A term does not fit the running word.
class TypeError : public InputError {
 public:
  TypeError(std::size_t index, const std::string& what)
      : InputError("term " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Something that the theory guarantees did not happen (oracle mismatch,
/// inexact division, broken pipeline invariant).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A rewriting stage ran past its application budget.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted(const std::string& stage, const std::string& dump)
      : std::runtime_error("fuel exhausted in " + stage), dump_(dump) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

}  // namespace soergel
