#pragma once

#include <vector>

namespace vortex::specfun {

//! Integer-order Bessel function of the first kind, J_order(x).
/*! Valid for |order| <= 64 and finite x >= 0 (negative x is accepted
    through J_n(-x) = (-1)^n J_n(x)). Relative accuracy is ~1e-13 away from
    the zeros of J_order for x up to 1e3.

    Power series for small x, Miller's backward recurrence normalised by
    J_0 + 2 sum J_2k = 1 in the bulk, Hankel asymptotics for very large x.
    Throws DomainError for non-finite x or |order| > 64.
*/
double bessel_j(int order, double x);

/// Hydrogenic bound-state radial function R_nl(r), Z = 1, atomic units.
class RadialWavefunction {
public:
  /// Throws InvalidQuantumNumbers unless 1 <= n <= 10 and 0 <= l < n.
  RadialWavefunction(int n, int l);

  double operator()(double r) const;

  int n() const { return m_n; }
  int l() const { return m_l; }

private:
  int m_n;
  int m_l;
  double m_norm;
  // coefficients of the associated Laguerre polynomial L^{2l+1}_{n-l-1}(x)
  std::vector<double> m_laguerre;
};

double radial(int n, int l, double r);

/// dR_10/dr; equals -R_10(r) since R_10 = 2 e^{-r}.
double radial_derivative_10(double r);

//! Y_lm(theta, phi = 0) with the Condon-Shortley phase, as a function of
//! cos(theta). Real by construction.
class SphericalHarmonicSlice {
public:
  /// Throws InvalidQuantumNumbers unless |m| <= l <= 10.
  SphericalHarmonicSlice(int l, int m);

  double operator()(double cos_theta) const;

  int l() const { return m_l; }
  int m() const { return m_m; }

private:
  int m_l;
  int m_m;
};

double ylm_phi0(int l, int m, double cos_theta);

} // namespace vortex::specfun
