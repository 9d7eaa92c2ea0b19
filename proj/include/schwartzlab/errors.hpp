#pragma once

#include <stdexcept>
#include <string>

namespace schwartzlab {

/// Base of every error raised by the library.
class LabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions, grids or actions between operands.
class StructuralError : public LabError {
 public:
  using LabError::LabError;
};

/// Argument outside the documented domain (non-finite, over a cap, ...).
class InputError : public LabError {
 public:
  using LabError::LabError;
};

/// A sampled function does not decay at the truncation boundary, or a
/// periodic-wraparound result is contaminated. Usually means L is too small.
class DomainTruncationError : public LabError {
 public:
  using LabError::LabError;
};

/// Antiderivative requested for a function whose total mass is not zero.
class MeanNotZeroError : public LabError {
 public:
  using LabError::LabError;
};

/// The continuous Fourier transform does not fit on the session grid.
class GridMismatchError : public LabError {
 public:
  using LabError::LabError;
};

/// Division by (x - y) requested for a function not vanishing on the diagonal.
class NotInIdealError : public LabError {
 public:
  using LabError::LabError;
};

/// A certified bound was violated. Carries the worst offender.
class VerificationFailure : public LabError {
 public:
  VerificationFailure(const std::string& what, double worst_ratio, double at_x)
      : LabError(what), worst_ratio_(worst_ratio), at_x_(at_x) {}
  double worst_ratio() const noexcept { return worst_ratio_; }
  double at_x() const noexcept { return at_x_; }

 private:
  double worst_ratio_;
  double at_x_;
};

/// Bad configuration or command line.
class UsageError : public LabError {
 public:
  using LabError::LabError;
};

}  // namespace schwartzlab
