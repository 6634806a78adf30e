#ifndef DGAP_ERRORS_HPP
#define DGAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dgap {

// A resolvent-type factor (n -/+ j + z) vanished while evaluating a walk weight
// or a series term. Carries the offending interior vertex.
class SingularDenominatorError : public std::runtime_error {
public:
  SingularDenominatorError(long vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}
  long vertex() const noexcept { return vertex_; }

private:
  long vertex_;
};

// Series or iteration failed to meet its stopping rule within the hard cap.
class NonConvergentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// |beta/sigma0 - 1| >= 1/2: the analytic square root of beta-*beta+ is not
// certified on this input.
class BranchInstabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The disc |lambda - n| < 1/2 does not contain exactly two eigenvalues
// (matrix route), or a series root converged outside |z| < 1/2.
class LocalizationError : public std::runtime_error {
public:
  LocalizationError(long count_found, const std::string& what)
      : std::runtime_error(what), count_found_(count_found) {}
  long count_found() const noexcept { return count_found_; }

private:
  long count_found_;
};

// Brute-force walk enumeration request beyond the |n| + 2r <= 34 cap.
class EnumerationCapError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Dense eigensolver gave up (QR sweep cap).
class NumericalFailureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Asymptotic predictors require all four potential coefficients nonzero.
class ZeroCoefficientError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dgap

#endif  // DGAP_ERRORS_HPP
