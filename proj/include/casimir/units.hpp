#pragma once

// Internal unit system: energies (including frequencies hbar*xi) in eV,
// lengths in nm, temperatures in K. Pressures come out in eV/nm^3 and
// forces in eV/nm before conversion to SI.

#include <numbers>

namespace casimir::units {

inline constexpr double hbar_c_eV_nm = 197.3269804;
inline constexpr double k_B_eV_per_K = 8.617333262e-5;

inline constexpr double eV_per_nm3_to_Pa = 1.602176634e8;
inline constexpr double eV_per_nm_to_N = 1.602176634e-10;

inline constexpr double nm_per_um = 1.0e3;

inline constexpr double zeta3 = 1.2020569031595942853997;
inline constexpr double pi = std::numbers::pi;

inline constexpr double thermal_energy_eV(double temperature_K) {
  return k_B_eV_per_K * temperature_K;
}

} // namespace casimir::units
