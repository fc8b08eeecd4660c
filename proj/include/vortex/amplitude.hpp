#pragma once

#include "vortex/beam.hpp"

#include <complex>
#include <map>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace vortex::amplitude {

using Complex = std::complex<double>;
using beam::BeamParams;

/// Hydrogenic level |n l m>. Throws InvalidQuantumNumbers unless
/// 1 <= n <= 10, 0 <= l < n and |m| <= l.
struct AtomicState {
  int n;
  int l;
  int m;

  AtomicState(int n, int l, int m);
  auto operator<=>(const AtomicState &) const = default;
};

/// The transition always starts from 1s.
inline const AtomicState ground_state{1, 0, 0};

/// Resonant photon energy 1s -> n_f in Hartree (recoil neglected).
/// Throws InvalidQuantumNumbers for n_f < 2.
double photon_energy_for(int n_f);
double photon_energy_for(const AtomicState &final_state);

struct QuadratureSettings {
  int angular_nodes = 64;   // Gauss-Legendre in cos(theta_r)
  int panel_order = 16;     // Gauss-Legendre per radial panel
  int initial_panels = 16;
  int max_panels = 4096;
  double rel_tol = 1e-12;
  double r_max_per_n2 = 40.0; // r_max = 40 n_f^2 a0

  /// Every node count doubled; used for convergence checks.
  QuadratureSettings refined() const;
};

/// Value and absolute error estimate of one reduced radial-angular integral.
struct ReducedIntegral {
  Complex value;
  double quad_error;
};

//! The reduced atomic factor
//!   int r^2 dr R_{n l}(r) R_10(r) int d(cos th) J_{m-lambda}(k_perp r sin th)
//!       Y_lm(th, 0) Y_{1 lambda}(th, 0) exp(i k_z r cos th)
//! for a transverse / longitudinal wavenumber pair. k_perp = 0 is the plane
//! wave. Throws ConvergenceError (carrying the partial value) if the radial
//! refinement limit is hit.
ReducedIntegral reduced_integral(const AtomicState &final_state,
                                 int lambda_pol, double k_perp, double k_z,
                                 const QuadratureSettings &settings = {});

struct ReducedFactor {
  Complex value;
  double quad_error;
  int lambda_pol;
  AtomicState final_state;
  BeamParams beam;
};

/// g_{n_f l_f m_f lambda} for the beam's kinematics (omega, theta_k).
ReducedFactor g_reduced(const AtomicState &final_state, int lambda_pol,
                        const BeamParams &beam,
                        const QuadratureSettings &settings = {});

/// Plane-wave analogue (theta_k -> 0, kappa -> 0) at photon energy omega.
ReducedIntegral g_plane_wave(const AtomicState &final_state, int lambda_pol,
                             double omega,
                             const QuadratureSettings &settings = {});

/// Memo table for g. g depends on the beam only through (omega, theta_k),
/// so both helicities and every m_gamma share entries. Concurrent readers,
/// single writer per insertion.
class ReducedFactorCache {
public:
  explicit ReducedFactorCache(QuadratureSettings settings = {})
      : m_settings(settings) {}

  ReducedFactor get(const AtomicState &final_state, int lambda_pol,
                    const BeamParams &beam);

  const QuadratureSettings &settings() const { return m_settings; }
  std::size_t size() const;

private:
  using Key = std::tuple<int, int, int, int, double, double>;
  QuadratureSettings m_settings;
  mutable std::shared_mutex m_mutex;
  std::map<Key, ReducedIntegral> m_table;
};

/// C = i^{-Lambda} [cos^2(th/2) g_Lambda + (i/sqrt2) sin th g_0
///                  - sin^2(th/2) g_{-Lambda}]
Complex helicity_combination(const BeamParams &beam, Complex g_same,
                             Complex g_zero, Complex g_opposite);
Complex helicity_combination(const AtomicState &final_state,
                             const BeamParams &beam,
                             const QuadratureSettings &settings = {});
Complex helicity_combination(const AtomicState &final_state,
                             const BeamParams &beam, ReducedFactorCache &cache);

/// C for every m_f in [-l_f, l_f]; element i is m_f = i - l_f.
std::vector<Complex> helicity_combinations(int n_f, int l_f,
                                           const BeamParams &beam,
                                           ReducedFactorCache &cache);

/// -sqrt(2 pi kappa / 3) in units of e / (m_e a0). Common to every
/// amplitude of a given beam; observables only use ratios.
double amplitude_prefactor(const BeamParams &beam);

struct Amplitude {
  Complex value;
  AtomicState final_state;
  BeamParams beam;
  double b;
  double phi_b;
  Complex combination;
  double bessel_factor;
};

//! Off-axis transition amplitude M(b) for the beam axis at (b, phi_b):
//!   prefactor * e^{i(m_gamma - m_f) phi_b} * J_{m_f - m_gamma}(kappa b) * C
/*! b in Bohr radii. b == 0 takes the Kronecker branch, so the on-axis
    selection rule holds exactly. Throws DomainError for b < 0.
*/
Amplitude amplitude(const AtomicState &final_state, const BeamParams &beam,
                    double b, double phi_b, Complex combination);
Amplitude amplitude(const AtomicState &final_state, const BeamParams &beam,
                    double b, double phi_b,
                    const QuadratureSettings &settings = {});

struct ScalingFit {
  double sin_exponent;   // d log|g| / d log sin(theta_k) at small theta_k
  double omega_exponent; // d log|g| / d log omega over [0.1, 0.46875] Ha
  int expected_sin;
  int expected_omega;
};

/// Leading power of omega in g_{n_f l_f m_f Lambda}: q = p + |m_f - Lambda|,
/// p the smallest non-negative integer >= l_f - 1 - |m_f - Lambda| with the
/// parity that makes the cos(theta_r) integral non-zero.
int expected_omega_exponent(const AtomicState &final_state, int helicity);

/// Log-log fits of |g_{n_f l_f m_f Lambda}| against sin(theta_k) and omega.
/// Throws DegenerateError if any sampled |g| is below 1e-300.
ScalingFit selection_scaling_check(const AtomicState &final_state,
                                   const BeamParams &beam,
                                   const QuadratureSettings &settings = {});

} // namespace vortex::amplitude
