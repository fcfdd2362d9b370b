#pragma once

#include <stdexcept>
#include <string>

namespace gradelie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-conformable shapes or mismatched ambient dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to normalize a Lie algebra maps some basis element outside it.
class NotNormalizingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Numeric routine failed to converge or a numeric result could not be
/// rationalized within tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A structural identity that is a theorem failed on concrete data. Always
/// indicates an implementation defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The invariant-subspace search ran out of candidates although the
/// associative closure is proper.
class WitnessSearchError : public Error {
 public:
  WitnessSearchError(const std::string& what, std::size_t assoc_dim) : Error(what), assoc_dim_(assoc_dim) {}
  [[nodiscard]] std::size_t assoc_dim() const { return assoc_dim_; }

 private:
  std::size_t assoc_dim_;
};

}  // namespace gradelie
