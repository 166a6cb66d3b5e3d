#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

/// Operand shapes do not fit together (matrix sizes, vector lengths,
/// family counts).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that must be invertible is singular.
class InvertibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Unknown catalog name or similar lookup failure.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Representations compared over different algebras.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller-side precondition that the library checks failed.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text or document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document refers to a basis index outside the declared dimension.
class IndexOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace leibniz
