#pragma once

#include <array>
#include <complex>

namespace vortex::beam {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Vec3c = std::array<Complex, 3>;
/// Contravariant (t, x, y, z) components.
using Vec4c = std::array<Complex, 4>;

//! One twisted-photon (Bessel) mode |kappa, m_gamma, k_z, Lambda>.
/*! omega in Hartree; wavenumbers in 1/a0 with k = alpha * omega,
    kappa = k sin(theta_k), k_z = k cos(theta_k).
*/
class BeamParams {
public:
  /// Throws DomainError unless omega > 0 and 0 < theta_k < pi/2;
  /// InvalidQuantumNumbers unless helicity is +-1 and |m_gamma| <= 60.
  BeamParams(double omega, double theta_k, int m_gamma, int helicity);

  static BeamParams from_wavelength_nm(double wavelength_nm, double theta_k,
                                       int m_gamma, int helicity);

  /// Same kinematics, different angular-momentum labels.
  BeamParams with_mode(int m_gamma, int helicity) const {
    return BeamParams(m_omega, m_theta_k, m_gamma, helicity);
  }

  double omega() const { return m_omega; }
  double theta_k() const { return m_theta_k; }
  int m_gamma() const { return m_m_gamma; }
  int helicity() const { return m_helicity; }

  double wavenumber() const { return m_k; }
  double kappa() const { return m_kappa; }
  double k_z() const { return m_k_z; }
  /// Vacuum wavelength in Bohr radii.
  double wavelength() const;
  double wavelength_nm() const;

  bool operator==(const BeamParams &) const = default;

private:
  double m_omega;
  double m_theta_k;
  int m_m_gamma;
  int m_helicity;
  double m_k;
  double m_kappa;
  double m_k_z;
};

/// Space-time point, Cartesian, atomic units.
struct SpaceTimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static SpaceTimePoint cylindrical(double rho, double phi, double z,
                                    double t = 0.0);
  double rho() const;
  double phi() const;
};

/// Constant basis vectors eta_{+1}, eta_{-1}, eta_0.
struct PolarizationBasis {
  /// eta_{+-1} = (0, -+1, -i, 0)/sqrt2, eta_0 = (0, 0, 0, 1).
  static Vec4c eta(int lambda);
};

/// Polarisation of the plane-wave component at azimuth phi_k of the cone.
Vec4c polarization_vector(const BeamParams &params, double phi_k);

/// Coordinate-space wave function of the mode centred on the z axis.
Vec4c vector_potential(const BeamParams &params, const SpaceTimePoint &x);

/// Mode with its axis moved to the transverse position (b_x, b_y).
Vec4c translate(const BeamParams &params, std::array<double, 2> b,
                const SpaceTimePoint &x);

/// E, B and the Poynting vector at one point. E and B are complex;
/// S = Re(E) x Re(B). All vectors in cylindrical (rho, phi, z) components.
struct FieldSample {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;
  double t = 0.0;
  Vec3c E{};
  Vec3c B{};
  Vec3 S{};
};

//! Fields of the mode at one point.
/*! Field units: E = -dA/d(ct) and B = curl A with c = 1, so both scale
    with the wavenumber k. For helicity +1, B uses the closed Bessel form;
    for helicity -1 it uses curl A = Lambda k A, which holds for every
    plane-wave component. In both cases E = i Lambda B.
*/
FieldSample fields(const BeamParams &params, const SpaceTimePoint &x);

/// Cartesian (x, y, z) vector to cylindrical components at azimuth phi.
template <class T>
std::array<T, 3> to_cylindrical(const std::array<T, 3> &v, double phi);

} // namespace vortex::beam
