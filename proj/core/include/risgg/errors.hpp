#pragma once

#include <stdexcept>
#include <string>

namespace risgg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Meijer G parameters place a left pole on top of a right pole, or the
/// remaining poles cannot be separated by any of the available evaluation paths.
class PoleCollisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An iterative evaluation (series, contour quadrature, adaptive integration)
/// failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double abscissa, double bound)
      : std::runtime_error(what), abscissa_(abscissa), bound_(bound) {}

  /// Real part of the Mellin-Barnes contour, or NaN when no contour was used.
  double abscissa() const noexcept { return abscissa_; }
  /// Truncation bound reached (contour height or series length).
  double bound() const noexcept { return bound_; }

private:
  double abscissa_;
  double bound_;
};

/// The moment-matched fit produced an inadmissible parameter set.
class DegenerateFitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A gamma factor of a closed-form expression sits on a pole.
class PoleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Requested Meijer G orders exceed what the closed-form SER supports.
class EngineOrderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace risgg
