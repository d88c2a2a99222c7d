#pragma once

#include <stdexcept>
#include <string>

namespace innerdist {

/// Argument outside the domain of an operation (bad order, index, shape).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Constructor parameters violate a precondition (gcd conditions, parity).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested object provably does not exist (e.g. pandiagonal of even order).
class NonexistenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed grid text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace innerdist
