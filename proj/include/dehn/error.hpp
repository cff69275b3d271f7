#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dehn {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on an argument (e.g. the slope 0/0).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A family formula evaluated to something that is not a manifold,
/// e.g. a lens space with non-coprime parameters or a fiber of order 0.
class IllFormedClaim : public Error {
 public:
  using Error::Error;
};

/// The answer depends on invariants the model does not carry.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// Parameters outside a family's domain, or a slope the family makes no claim about.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dehn
