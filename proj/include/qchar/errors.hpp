#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

// Base class for violations of an exact algebraic identity. Any of these
// surfacing from a computation means a result could not be produced exactly;
// callers must never truncate or approximate past one.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public IdentityViolation {
 public:
  explicit NotDivisible(const std::string& what) : IdentityViolation("not divisible: " + what) {}
};

class ExponentNotDivisible : public IdentityViolation {
 public:
  explicit ExponentNotDivisible(const std::string& what)
      : IdentityViolation("exponent not divisible: " + what) {}
};

class NotSymmetric : public IdentityViolation {
 public:
  explicit NotSymmetric(const std::string& what) : IdentityViolation("not symmetric: " + what) {}
};

class NonzeroRemainder : public IdentityViolation {
 public:
  explicit NonzeroRemainder(const std::string& what)
      : IdentityViolation("nonzero remainder: " + what) {}
};

class NcNotDivisible : public IdentityViolation {
 public:
  explicit NcNotDivisible(const std::string& what)
      : IdentityViolation("quantum torus division failed: " + what) {}
};

class DegenerateEigenvalue : public IdentityViolation {
 public:
  explicit DegenerateEigenvalue(const std::string& what)
      : IdentityViolation("degenerate eigenvalue: " + what) {}
};

class PoleAtZero : public IdentityViolation {
 public:
  explicit PoleAtZero(const std::string& what) : IdentityViolation("pole at t=0: " + what) {}
};

// Bad caller input (shape mismatch, out-of-range index, malformed text).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qchar
