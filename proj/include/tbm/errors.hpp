#pragma once

#include <stdexcept>
#include <string>

namespace tbm {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: malformed frame, subset outside its frame, invalid matrix.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FrameMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Values that do not describe a basic belief assignment (negative mass,
// total different from one, inversion that produced negative mass).
class NotABeliefFunction : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InfeasibleConstraints : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A mathematically well-formed request whose precondition fails: total
// conflict, singular operators, retraction of evidence that was never added.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NormalizationUndefined : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularSpecialization : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonInvertibleEvidence : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Removing evidence yields negative masses: it was not part of the corpus.
class NotRetractable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace tbm
