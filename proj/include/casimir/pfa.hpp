#pragma once

// Sphere-plate Casimir force in the proximity force approximation,
// F = 2 pi R E_pp(a), with the same zero-mode decomposition and
// prescription routing as the plane-parallel pressure.

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Largest a/R accepted before the PFA error (order a/R) is deemed too large.
inline constexpr double max_gap_over_radius = 0.05;

struct SphereGeometry {
  double radius_um = 0.0;
  double gap_nm = 0.0;  ///< minimum sphere-plate separation

  void validate() const;
  double radius_nm() const;
};

struct ForceBreakdown {
  double f0_te_N = 0.0;
  double f0_tm_N = 0.0;
  double f1_N = 0.0;
  double total_N = 0.0;
  long l_used = 0;
  double max_quad_error_N = 0.0;
};

/// config.gap_nm must equal geometry.gap_nm.
ForceBreakdown f_ps(const SphereGeometry& geometry, const CavityConfig& config);

/// k_B T R zeta(3)/(8 a^2) in N.
double f0_tm_ps(const SphereGeometry& geometry, double temperature_K);
double f0_tm_ps_numeric(const SphereGeometry& geometry, double temperature_K,
                        double rel_tol = 1e-12);

/// l = 0 TE force for plasma-form static coefficients on each plate.
double f0_te_ps(const SphereGeometry& geometry, double temperature_K, double omega_eff1_eV,
                double omega_eff2_eV, double rel_tol);
inline double f0_te_ps(const SphereGeometry& geometry, double temperature_K, double omega_eff_eV,
                       double rel_tol = 1e-10) {
  return f0_te_ps(geometry, temperature_K, omega_eff_eV, omega_eff_eV, rel_tol);
}

} // namespace casimir
