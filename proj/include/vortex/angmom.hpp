#pragma once

#include "vortex/beam.hpp"

#include <array>

namespace vortex::angmom {

using beam::BeamParams;

/// Spin projection Lambda cos(theta_k), from i (eps x eps*)_z of the cone's
/// polarisation vectors.
double spin_projection(const BeamParams &beam);

/// Relative weights of the three Bessel channels of the mode
/// (orders m_gamma - Lambda, m_gamma, m_gamma + Lambda).
struct ChannelWeights {
  std::array<int, 3> orders;
  /// Normalised disk-integrated intensities at the requested kappa R.
  std::array<double, 3> disk;
  /// R -> infinity values: cos^4(th/2), 1/2 sin^2 th, sin^4(th/2).
  std::array<double, 3> limit;
  double max_rel_error;
};

ChannelWeights channel_weights(const BeamParams &beam, double kappa_radius);

//! Orbital projection m_gamma - Lambda cos(theta_k).
/*! The channel intensities are integrated over a disk of radius
    kappa_radius / kappa; each must be within 1% of its limiting weight or
    ConvergenceError is thrown. The returned value uses the limiting weights.
*/
double orbital_projection(const BeamParams &beam, double kappa_radius = 1e3);

struct AngularMomentumBudget {
  double spin;
  double orbital;
  double total;
  BeamParams beam;
};

/// spin + orbital. Throws std::logic_error if the total misses m_gamma by
/// more than 1e-10.
AngularMomentumBudget total_projection(const BeamParams &beam,
                                       double kappa_radius = 1e3);

} // namespace vortex::angmom
