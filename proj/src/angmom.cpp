#include "vortex/angmom.hpp"

#include "vortex/errors.hpp"
#include "vortex/observables.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace vortex::angmom {

double spin_projection(const BeamParams &beam) {
  // The result is independent of phi_k; sample a few azimuths and average.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::acos(-1.0));
  constexpr int samples = 4;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto eps = beam::polarization_vector(beam, azimuth(rng));
    // (eps x eps*)_z from the spatial components (1, 2)
    const auto cross_z =
        eps[1] * std::conj(eps[2]) - eps[2] * std::conj(eps[1]);
    sum += (std::complex<double>(0.0, 1.0) * cross_z).real();
  }
  return sum / samples;
}

ChannelWeights channel_weights(const BeamParams &beam, double kappa_radius) {
  const int m = beam.m_gamma();
  const int lam = beam.helicity();
  const double th = beam.theta_k();

  ChannelWeights w{};
  w.orders = {m - lam, m, m + lam};
  w.limit = {std::pow(std::cos(0.5 * th), 4), 0.5 * std::sin(th) * std::sin(th),
             std::pow(std::sin(0.5 * th), 4)};

  const double kappa = beam.kappa();
  const double radius = kappa_radius / kappa;
  std::array<double, 3> raw{};
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    raw[c] = w.limit[c] *
             observables::disk_bessel_integral(w.orders[c], kappa, radius);
    total += raw[c];
  }
  double limit_total = w.limit[0] + w.limit[1] + w.limit[2];
  w.max_rel_error = 0.0;
  for (int c = 0; c < 3; ++c) {
    w.disk[c] = raw[c] / total;
    const double target = w.limit[c] / limit_total;
    w.max_rel_error =
        std::max(w.max_rel_error, std::abs(w.disk[c] / target - 1.0));
  }
  return w;
}

double orbital_projection(const BeamParams &beam, double kappa_radius) {
  const auto w = channel_weights(beam, kappa_radius);
  if (w.max_rel_error > 0.01) {
    throw ConvergenceError(
        "orbital_projection: channel weights not within 1% at this disk radius",
        w.max_rel_error, w.max_rel_error);
  }
  const double norm = w.limit[0] + w.limit[1] + w.limit[2];
  double orbital = 0.0;
  for (int c = 0; c < 3; ++c) {
    orbital += w.orders[c] * w.limit[c];
  }
  return orbital / norm;
}

AngularMomentumBudget total_projection(const BeamParams &beam,
                                       double kappa_radius) {
  const double spin = spin_projection(beam);
  const double orbital = orbital_projection(beam, kappa_radius);
  const double total = spin + orbital;
  if (std::abs(total - beam.m_gamma()) > 1e-10) {
    throw std::logic_error("total_projection: spin + orbital != m_gamma");
  }
  return {spin, orbital, total, beam};
}

} // namespace vortex::angmom
