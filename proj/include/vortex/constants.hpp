#pragma once

#include <numbers>

// Atomic (Hartree) units throughout: hbar = m_e = e = a0 = 1, c = 1/alpha.
namespace vortex::constants {

inline constexpr double pi = std::numbers::pi;

// CODATA 2018
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double bohr_radius_nm = 0.0529177210903;

/// Photon wavenumber (1/a0) for an energy in Hartree.
constexpr double wavenumber(double omega_hartree) {
  return fine_structure * omega_hartree;
}

/// Vacuum wavelength in nm for an energy in Hartree.
constexpr double wavelength_nm(double omega_hartree) {
  return 2.0 * pi * bohr_radius_nm / wavenumber(omega_hartree);
}

/// Photon energy in Hartree for a vacuum wavelength in nm.
constexpr double omega_from_wavelength_nm(double lambda_nm) {
  return 2.0 * pi * bohr_radius_nm / (fine_structure * lambda_nm);
}

} // namespace vortex::constants
