#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

// Invalid arguments to an operation (precondition violations).
class BadInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonResidue : public BadInput {
 public:
  using BadInput::BadInput;
};

class BadEps : public BadInput {
 public:
  using BadInput::BadInput;
};

class BadSector : public BadInput {
 public:
  using BadInput::BadInput;
};

class EmptyRange : public BadInput {
 public:
  using BadInput::BadInput;
};

// p is inert or ramified in Q(sqrt 2).
class NotSplit : public BadInput {
 public:
  using BadInput::BadInput;
};

// Numerical failures. The CLI maps these to exit status 3.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class TruncationFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace heckelab
