#include "casimir/pfa.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"
#include "matsubara_series.hpp"

namespace casimir {

using detail::Quantity;

void SphereGeometry::validate() const {
  if (!std::isfinite(radius_um) || !(radius_um > 0.0))
    throw ConfigError("sphere radius must be positive");
  if (!std::isfinite(gap_nm) || gap_nm < min_gap_nm)
    throw ConfigError("gap must be at least 10 nm");
  if (!(gap_nm / radius_nm() < max_gap_over_radius))
    throw ConfigError("a/R must stay below 0.05 for the proximity force approximation");
}

double SphereGeometry::radius_nm() const { return radius_um * units::nm_per_um; }

double f0_tm_ps(const SphereGeometry& geometry, double temperature_K) {
  geometry.validate();
  const double a = geometry.gap_nm;
  return units::thermal_energy_eV(temperature_K) * geometry.radius_nm() * units::zeta3 /
         (8.0 * a * a) * units::eV_per_nm_to_N;
}

double f0_tm_ps_numeric(const SphereGeometry& geometry, double temperature_K, double rel_tol) {
  geometry.validate();
  return detail::zero_mode_tm(Quantity::ForcePerRadius, geometry.gap_nm, temperature_K, rel_tol)
             .value *
         geometry.radius_nm() * units::eV_per_nm_to_N;
}

double f0_te_ps(const SphereGeometry& geometry, double temperature_K, double omega_eff1_eV,
                double omega_eff2_eV, double rel_tol) {
  geometry.validate();
  if (!(omega_eff1_eV >= 0.0) || !(omega_eff2_eV >= 0.0))
    throw DomainError("omega_eff must be non-negative");
  return detail::zero_mode_te(Quantity::ForcePerRadius, geometry.gap_nm, temperature_K,
                              omega_eff1_eV, omega_eff2_eV, rel_tol)
             .value *
         geometry.radius_nm() * units::eV_per_nm_to_N;
}

ForceBreakdown f_ps(const SphereGeometry& geometry, const CavityConfig& config) {
  geometry.validate();
  config.validate();
  if (geometry.gap_nm != config.gap_nm)
    throw ConfigError("sphere geometry and cavity config disagree on the gap");

  const double to_newton = geometry.radius_nm() * units::eV_per_nm_to_N;
  const PlateState s1 = config.state1();
  const PlateState s2 = config.state2();

  ForceBreakdown out;
  const auto te = detail::zero_mode_te(Quantity::ForcePerRadius, config.gap_nm,
                                       config.temperature_K,
                                       te_zero_omega_eff(s1, config.prescription),
                                       te_zero_omega_eff(s2, config.prescription),
                                       config.quad_rel_tol);
  out.f0_te_N = te.value * to_newton;
  out.f0_tm_N =
      tm_zero_reflection(s1) * tm_zero_reflection(s2) * f0_tm_ps(geometry, config.temperature_K);

  const MatsubaraSum rest = detail::nonzero_modes(Quantity::ForcePerRadius, config);
  out.f1_N = rest.value * to_newton;
  out.l_used = rest.l_used;
  out.max_quad_error_N = std::max(te.abs_error, rest.max_quad_error) * to_newton;
  out.total_N = out.f0_te_N + out.f0_tm_N + out.f1_N;
  return out;
}

} // namespace casimir
