#include "casimir/lifshitz.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"
#include "matsubara_series.hpp"

namespace casimir {

void CavityConfig::validate() const {
  if (!std::isfinite(gap_nm) || gap_nm < min_gap_nm)
    throw ConfigError("gap must be at least " + std::to_string(min_gap_nm) + " nm");
  if (!std::isfinite(temperature_K) || !(temperature_K > 0.0))
    throw ConfigError("temperature must be positive");
  auto tol_ok = [](double t) { return t > 0.0 && t <= 1e-4; };
  if (!tol_ok(quad_rel_tol) || !tol_ok(sum_rel_tol))
    throw ConfigError("tolerances must lie in (0, 1e-4]");
  if (l_max_cap < 1) throw ConfigError("l_max_cap must be positive");
  plate1.material.validate();
  plate2.material.validate();
}

double matsubara(double temperature_K, long l) {
  return 2.0 * units::pi * units::thermal_energy_eV(temperature_K) * static_cast<double>(l);
}

double cavity_frequency(double gap_nm) { return units::hbar_c_eV_nm / (2.0 * gap_nm); }

double p0_tm(double gap_nm, double temperature_K) {
  const double a3 = gap_nm * gap_nm * gap_nm;
  return units::thermal_energy_eV(temperature_K) * units::zeta3 / (8.0 * units::pi * a3) *
         units::eV_per_nm3_to_Pa;
}

double p0_tm_numeric(double gap_nm, double temperature_K, double rel_tol) {
  return detail::zero_mode_tm(detail::Quantity::Pressure, gap_nm, temperature_K, rel_tol).value *
         units::eV_per_nm3_to_Pa;
}

double p0_te_numeric(double gap_nm, double temperature_K, double omega_eff1_eV,
                     double omega_eff2_eV, double rel_tol) {
  if (!(omega_eff1_eV >= 0.0) || !(omega_eff2_eV >= 0.0))
    throw DomainError("omega_eff must be non-negative");
  return detail::zero_mode_te(detail::Quantity::Pressure, gap_nm, temperature_K, omega_eff1_eV,
                              omega_eff2_eV, rel_tol)
             .value *
         units::eV_per_nm3_to_Pa;
}

double p0_te_expansion(double gap_nm, double temperature_K, double delta_eff_nm) {
  const double x = delta_eff_nm / gap_nm;
  if (!(x < 0.2))
    throw ValidityError("TE zero-mode expansion needs delta/a < 0.2; use p0_te_numeric");
  return p0_tm(gap_nm, temperature_K) * (1.0 - 6.0 * x + 24.0 * x * x);
}

MatsubaraSum p1(const CavityConfig& config) {
  config.validate();
  MatsubaraSum s = detail::nonzero_modes(detail::Quantity::Pressure, config);
  s.value *= units::eV_per_nm3_to_Pa;
  s.max_quad_error *= units::eV_per_nm3_to_Pa;
  return s;
}

PressureBreakdown pressure(const CavityConfig& config) {
  config.validate();
  const PlateState s1 = config.state1();
  const PlateState s2 = config.state2();

  PressureBreakdown out;
  const auto te = detail::zero_mode_te(detail::Quantity::Pressure, config.gap_nm,
                                       config.temperature_K,
                                       te_zero_omega_eff(s1, config.prescription),
                                       te_zero_omega_eff(s2, config.prescription),
                                       config.quad_rel_tol);
  out.p0_te_Pa = te.value * units::eV_per_nm3_to_Pa;
  out.p0_tm_Pa =
      tm_zero_reflection(s1) * tm_zero_reflection(s2) * p0_tm(config.gap_nm, config.temperature_K);

  const MatsubaraSum rest = p1(config);
  out.p1_Pa = rest.value;
  out.l_used = rest.l_used;
  out.max_quad_error_Pa = std::max(te.abs_error * units::eV_per_nm3_to_Pa, rest.max_quad_error);
  out.total_Pa = out.p0_te_Pa + out.p0_tm_Pa + out.p1_Pa;
  return out;
}

} // namespace casimir
