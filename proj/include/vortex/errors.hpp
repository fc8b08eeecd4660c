#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace vortex {

/// Non-finite or out-of-range real argument.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Quantum numbers outside n >= 1, 0 <= l < n, |m| <= l (or other
/// integer labels outside their allowed set).
class InvalidQuantumNumbers : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature hit its refinement limit. Carries the best value
/// reached so callers can still inspect it.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string &what, std::complex<double> partial,
                   double error_estimate)
      : std::runtime_error(what), m_partial(partial),
        m_error_estimate(error_estimate) {}

  std::complex<double> partial() const { return m_partial; }
  double error_estimate() const { return m_error_estimate; }

private:
  std::complex<double> m_partial;
  double m_error_estimate;
};

/// A ratio or fit whose denominator / signal vanishes.
class DegenerateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace vortex
