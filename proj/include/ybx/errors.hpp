#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An eigenvalue sits too close to the imaginary axis for the matrix sign
// function to be defined.
class ImaginaryAxisEigenvalue : public Error {
 public:
  using Error::Error;
};

// Requested lambda is not (numerically) in the spectrum.
class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

class NonCommutingInput : public Error {
 public:
  using Error::Error;
};

class EmptyGamma : public Error {
 public:
  using Error::Error;
};

class InvalidProjector : public Error {
 public:
  using Error::Error;
};

class InconsistentB : public Error {
 public:
  using Error::Error;
};

class NonsingularInput : public Error {
 public:
  using Error::Error;
};

class SingularS : public Error {
 public:
  using Error::Error;
};

class BlockEquationViolated : public Error {
 public:
  using Error::Error;
};

// Schur split could not separate the zero cluster from the rest.
class SplitMismatch : public Error {
 public:
  SplitMismatch(const std::string& msg, double epsilon)
      : Error(msg), epsilon_(epsilon) {}
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

class NullspaceTooSmall : public Error {
 public:
  using Error::Error;
};

class SchurConvergence : public Error {
 public:
  using Error::Error;
};

// Adjacent-swap reordering perturbed an eigenvalue pair beyond tolerance.
class SwapFailed : public Error {
 public:
  using Error::Error;
};

class UnknownFixture : public Error {
 public:
  using Error::Error;
};

class BadRank : public Error {
 public:
  using Error::Error;
};

class BadStructure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ybx
