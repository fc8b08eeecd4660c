#pragma once

#include "vortex/amplitude.hpp"

#include <optional>
#include <vector>

namespace vortex::observables {

using amplitude::AtomicState;
using amplitude::ReducedFactorCache;
using beam::BeamParams;

//! Cross section averaged over uniformly distributed atom positions.
/*! `value` is |C|^2, i.e. sigma-bar in units of
    2 pi delta(E_f - E_i - omega) * 8 pi^3 alpha^3 / (3 k_z).
    The disk-average integral R/(pi kappa) and the flux 2 k_z/(pi^2 R) are
    folded into that unit.
*/
struct AveragedCrossSection {
  AtomicState final_state;
  BeamParams beam;
  double value;
};

/// 8 pi^3 alpha^3 / (3 k_z), natural units (e^2 = 4 pi alpha).
double sigma_unit(const BeamParams &beam);

AveragedCrossSection sigma_avg(const AtomicState &final_state,
                               const BeamParams &beam,
                               ReducedFactorCache &cache);
AveragedCrossSection sigma_avg(const AtomicState &final_state,
                               const BeamParams &beam);

/// int_0^R b J_nu(kappa b)^2 db by adaptive quadrature.
double disk_bessel_integral(int nu, double kappa, double radius);

/// Its large-R limit R / (pi kappa), the same for every nu.
double disk_bessel_limit(double kappa, double radius);

/// Photon flux of one mode averaged over a disk of radius R:
/// density 2 omega |A|^2 times wave-front velocity k_z/omega, integrated
/// numerically over the disk.
double disk_flux(const BeamParams &beam, double radius);

/// Its large-R limit 2 k_z / (pi^2 R).
double disk_flux_limit(const BeamParams &beam, double radius);

/// Fraction of the level's averaged rate into m_f != Lambda.
/// Throws DegenerateError if every sigma-bar vanishes.
double f_twisted(int n_f, int l_f, const BeamParams &beam,
                 ReducedFactorCache &cache);
double f_twisted(int n_f, int l_f, const BeamParams &beam);

/// Plane-wave cross section sigma^(pw)_{n_f l_f Lambda Lambda} at the
/// beam's photon energy, in the same reduced units as sigma_avg:
/// |g_pw|^2 * k_z / k (the plane-wave flux carries k where the twisted
/// one carries k_z).
double sigma_plane_wave(int n_f, int l_f, const BeamParams &beam,
                        const amplitude::QuadratureSettings &settings = {});

/// Total twisted rate into the level over the plane-wave rate.
/// Throws DegenerateError if the plane-wave reference vanishes.
double r_twisted(int n_f, int l_f, const BeamParams &beam,
                 ReducedFactorCache &cache);
double r_twisted(int n_f, int l_f, const BeamParams &beam);

/// b in Bohr radii; value is empty where both rates vanish.
struct AsymmetryPoint {
  double b;
  std::optional<double> value;
};

//! Helicity asymmetry at fixed total m-bar between the beams
//! (m_gamma = m_bar - 1, Lambda = -1) and (m_gamma = m_bar + 1, Lambda = +1).
/*! Rates at fixed b are sum_{m_f} |M(b)|^2; the helicity combinations are
    computed once on construction and each b costs only Bessel calls.
*/
class AsymmetryScan {
public:
  AsymmetryScan(int n_f, int l_f, int m_bar, const BeamParams &beam_template,
                ReducedFactorCache &cache);

  /// sum_{m_f} |M(b)|^2 for the Lambda = -1 and Lambda = +1 beams.
  std::pair<double, double> rates(double b) const;
  AsymmetryPoint at(double b) const;

  /// Asymmetry of the rates integrated over a disk of radius R,
  /// int 2 pi b db. Tends to zero as R grows.
  double disk_averaged(double radius) const;

  const BeamParams &minus_beam() const { return m_minus; }
  const BeamParams &plus_beam() const { return m_plus; }

private:
  int m_l_f;
  BeamParams m_minus;
  BeamParams m_plus;
  std::vector<amplitude::Complex> m_c_minus;
  std::vector<amplitude::Complex> m_c_plus;
};

AsymmetryPoint a_lambda(int n_f, int l_f, int m_bar,
                        const BeamParams &beam_template, double b);

} // namespace vortex::observables
