#pragma once

#include <stdexcept>
#include <string>

namespace ringlat {

/// Invalid algebraic input: a non-field modulus, a table that is not
/// commutative or associative, a subspace that is not a subalgebra, and so on.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable search budget (node count, scan pairs, subspace count)
/// was exhausted before the computation could finish.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes that must agree did not. This is a bug signal,
/// never a property of the input.
class InvariantViolation : public std::runtime_error {
 public:
  InvariantViolation(std::string tag, const std::string& what)
      : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

}  // namespace ringlat
