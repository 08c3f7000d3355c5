#include "casimir/deltas.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <cmath>
#include <optional>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/pfa.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

constexpr double max_thermal_parameter = 0.05;  // k_B T2 a / (hbar c)
constexpr double max_skin_ratio = 0.25;         // delta / a
constexpr double flag_digits_lost = 3.0;

void check_perturbative(double gap_nm, double t2_K, double omega_p_eV) {
  const double thermal = units::thermal_energy_eV(t2_K) * gap_nm / units::hbar_c_eV_nm;
  if (!(thermal < max_thermal_parameter))
    throw ValidityError("perturbative differential needs k_B T2 a/(hbar c) < 0.05");
  if (!(units::hbar_c_eV_nm / omega_p_eV / gap_nm < max_skin_ratio))
    throw ValidityError("perturbative differential needs delta/a < 0.25");
}

PlateState superconductor_at(const DeltaRequest& r, double temperature_K) {
  return {r.superconductor, temperature_K, r.force_normal};
}

double te_omega(const DeltaRequest& r, double temperature_K) {
  return te_zero_omega_eff(superconductor_at(r, temperature_K), r.prescription);
}

// Change of the TE static term carried by superconductivity. Nonzero only
// for Nb-Nb under the Drude prescription; with the plasma prescription the
// static coefficient is the same at T1 and T2, and a Drude normal plate
// kills the product for Nb-Au.
bool te_zero_changes(const DeltaRequest& r) {
  return r.prescription == ZeroModePrescription::Drude && r.setup == Setup::NbNb &&
         !r.force_normal;
}

CavityConfig cavity_at(const DeltaRequest& r, double temperature_K) {
  CavityConfig c;
  c.gap_nm = r.gap_nm;
  c.temperature_K = temperature_K;
  c.plate1 = {r.superconductor, r.force_normal};
  c.plate2 = r.setup == Setup::NbNb ? Plate{r.superconductor, r.force_normal}
                                    : Plate{r.normal_metal, false};
  c.prescription = r.prescription;
  c.quad_rel_tol = r.quad_rel_tol;
  c.sum_rel_tol = r.sum_rel_tol;
  c.l_max_cap = r.l_max_cap;
  c.workers = r.workers;
  return c;
}

DeltaResult closed_form_pressure(const DeltaRequest& r) {
  const double a = r.gap_nm;
  const double x = units::hbar_c_eV_nm / r.superconductor.omega_p_eV / a;

  double te_change = 0.0;
  if (te_zero_changes(r))
    te_change = p0_te_numeric(a, r.t2_K, te_omega(r, r.t2_K), r.quad_rel_tol) -
                p0_te_numeric(a, r.t1_K, te_omega(r, r.t1_K), r.quad_rel_tol);

  const double perturbative =
      -delta_fpp_perturbative(a, r.t1_K, r.t2_K, r.superconductor.omega_p_eV);

  double explicit_term = 0.0;
  if (r.prescription == ZeroModePrescription::Drude) {
    const double dT = r.t2_K - r.t1_K;
    explicit_term = -units::zeta3 * units::k_B_eV_per_K * dT / (8.0 * units::pi * a * a * a) *
                    (1.0 - 6.0 * x + 24.0 * x * x) * units::eV_per_nm3_to_Pa;
  }

  DeltaResult out;
  out.unit = "Pa";
  out.breakdown = {{"te_zero_change", te_change},
                   {"perturbative_dFpp", perturbative},
                   {"tm_explicit", explicit_term}};
  out.value = te_change + perturbative + explicit_term;
  return out;
}

DeltaResult closed_form_force(const DeltaRequest& r) {
  const SphereGeometry geometry{r.radius_um, r.gap_nm};
  geometry.validate();
  const double a = r.gap_nm;
  const double x = units::hbar_c_eV_nm / r.superconductor.omega_p_eV / a;

  double te_change = 0.0;
  if (te_zero_changes(r))
    te_change = f0_te_ps(geometry, r.t2_K, te_omega(r, r.t2_K), r.quad_rel_tol) -
                f0_te_ps(geometry, r.t1_K, te_omega(r, r.t1_K), r.quad_rel_tol);

  const double perturbative =
      delta_fps_perturbative(a, r.radius_um, r.t1_K, r.t2_K, r.superconductor.omega_p_eV);

  double explicit_term = 0.0;
  if (r.prescription == ZeroModePrescription::Drude) {
    const double dT = r.t2_K - r.t1_K;
    explicit_term = -geometry.radius_nm() * units::k_B_eV_per_K * units::zeta3 / (8.0 * a * a) *
                    dT * (1.0 - 4.0 * x + 12.0 * x * x) * units::eV_per_nm_to_N;
  }

  DeltaResult out;
  out.unit = "N";
  out.breakdown = {{"te_zero_change", te_change},
                   {"perturbative_dFps", perturbative},
                   {"tm_explicit", explicit_term}};
  out.value = te_change + perturbative + explicit_term;
  return out;
}

template <class Evaluate>
DeltaResult numeric_difference(const DeltaRequest& r, const char* unit, Evaluate evaluate) {
  DeltaResult out;
  out.unit = unit;
  if (r.t1_K == r.t2_K) {
    out.breakdown = {{"at_t1", 0.0}, {"at_t2", 0.0}};
    return out;
  }

  // Closed forms may be outside their own validity window; then there is no
  // prediction and the subtraction proceeds.
  std::optional<double> predicted;
  try {
    DeltaRequest closed = r;
    closed.method = DeltaMethod::ClosedForm;
    predicted = delta(closed).value;
  } catch (const ValidityError&) {
  }

  const double at_t1 = evaluate(cavity_at(r, r.t1_K));
  if (predicted) {
    const double relative = std::abs(*predicted) / std::abs(at_t1);
    if (relative < cancellation_floor(r.quad_rel_tol))
      throw CancellationError("predicted relative change " + std::to_string(relative) +
                                  " is below the numeric-difference floor; use the closed form",
                              relative);
  }
  const double at_t2 = evaluate(cavity_at(r, r.t2_K));

  out.value = at_t2 - at_t1;
  out.breakdown = {{"at_t1", at_t1}, {"at_t2", at_t2}};
  const double scale = std::max(std::abs(at_t1), std::abs(at_t2));
  out.digits_lost = out.value == 0.0 ? std::numeric_limits<double>::infinity()
                                     : std::max(0.0, std::log10(scale / std::abs(out.value)));
  out.cancellation_flag = out.digits_lost > flag_digits_lost;
  return out;
}

} // namespace

std::string_view to_string(DeltaGeometry geometry) {
  return geometry == DeltaGeometry::ParallelPlates ? "parallel" : "sphere";
}
std::string_view to_string(Setup setup) { return setup == Setup::NbNb ? "nbnb" : "nbau"; }
std::string_view to_string(DeltaMethod method) {
  return method == DeltaMethod::ClosedForm ? "closed" : "numeric";
}

MaterialModel delta_superconductor(double gamma_eV) {
  MaterialModel nb = niobium(gamma_eV);
  nb.omega_p_eV = common_omega_p_eV;
  return nb;
}

double DeltaResult::term(std::string_view name) const {
  for (const auto& t : breakdown)
    if (t.name == name) return t.value;
  throw std::out_of_range("no breakdown term named " + std::string(name));
}

void DeltaRequest::validate() const {
  superconductor.validate();
  normal_metal.validate();
  if (superconductor.kind != MaterialKind::Superconductor)
    throw ConfigError("the superconducting plate must be a Superconductor material");
  if (setup == Setup::NbAu && normal_metal.kind == MaterialKind::Superconductor)
    throw ConfigError("Nb-Au setup needs exactly one superconducting plate");
  if (!std::isfinite(gap_nm) || gap_nm < min_gap_nm)
    throw ConfigError("gap must be at least 10 nm");
  if (!(t1_K > 0.0)) throw ConfigError("t1 must be positive");
  if (!(t1_K <= t2_K)) throw ConfigError("t1 must not exceed t2");
  if (!(t2_K <= superconductor.t_c_K)) throw ConfigError("t2 must not exceed T_c");
  if (geometry == DeltaGeometry::SpherePlate) SphereGeometry{radius_um, gap_nm}.validate();
  auto tol_ok = [](double t) { return t > 0.0 && t <= 1e-4; };
  if (!tol_ok(quad_rel_tol) || !tol_ok(sum_rel_tol))
    throw ConfigError("tolerances must lie in (0, 1e-4]");
}

DerivedScales derived_scales(double gap_nm, double omega_p_eV) {
  return {units::hbar_c_eV_nm / (2.0 * gap_nm * units::k_B_eV_per_K),
          units::hbar_c_eV_nm / omega_p_eV};
}

double delta_fpp_leading(double t1_K, double t2_K) {
  const double k1 = units::thermal_energy_eV(t1_K);
  const double k2 = units::thermal_energy_eV(t2_K);
  const double hc3 = units::hbar_c_eV_nm * units::hbar_c_eV_nm * units::hbar_c_eV_nm;
  return units::pi * units::pi * (k2 * k2 * k2 * k2 - k1 * k1 * k1 * k1) / (45.0 * hc3) *
         units::eV_per_nm3_to_Pa;
}

double delta_fpp_perturbative(double gap_nm, double t1_K, double t2_K, double omega_p_eV) {
  check_perturbative(gap_nm, t2_K, omega_p_eV);
  const auto [t_eff, delta] = derived_scales(gap_nm, omega_p_eV);
  const double pi3 = units::pi * units::pi * units::pi;
  const double second = 1.0 + 90.0 * units::zeta3 / pi3 * (delta / gap_nm) * t_eff / (t1_K + t2_K) *
                                   (1.0 + t1_K * t2_K / (t1_K * t1_K + t2_K * t2_K));
  return -delta_fpp_leading(t1_K, t2_K) * second;
}

double delta_fps_leading(double t1_K, double t2_K) {
  const double kB = units::k_B_eV_per_K;
  const double hc2 = units::hbar_c_eV_nm * units::hbar_c_eV_nm;
  // eV/nm^2 -> N/m
  constexpr double eV_per_nm2_to_N_per_m = units::eV_per_nm_to_N * 1e9;
  return units::zeta3 * kB * kB * kB * (t2_K - t1_K) * (t1_K * t1_K + t2_K * t2_K) / hc2 *
         eV_per_nm2_to_N_per_m;
}

double delta_fps_perturbative(double gap_nm, double radius_um, double t1_K, double t2_K,
                              double omega_p_eV) {
  check_perturbative(gap_nm, t2_K, omega_p_eV);
  const auto [t_eff, delta] = derived_scales(gap_nm, omega_p_eV);
  const double x = delta / gap_nm;
  const double second =
      (1.0 + t1_K * t2_K / (t1_K * t1_K + t2_K * t2_K)) * (1.0 + 2.0 * x) -
      units::pi * units::pi * units::pi / (45.0 * units::zeta3) * (t1_K + t2_K) / t_eff *
          (1.0 + 4.0 * x);
  const double radius_m = radius_um * 1e-6;
  return radius_m * delta_fps_leading(t1_K, t2_K) * second;
}

double cancellation_floor(double quad_rel_tol) { return std::max(1e-10, 1e3 * quad_rel_tol); }

DeltaResult delta_pressure(const DeltaRequest& request) {
  request.validate();
  if (request.geometry != DeltaGeometry::ParallelPlates)
    throw ConfigError("delta_pressure needs the parallel-plate geometry");
  if (request.method == DeltaMethod::ClosedForm) return closed_form_pressure(request);
  return numeric_difference(request, "Pa",
                            [](const CavityConfig& c) { return pressure(c).total_Pa; });
}

DeltaResult delta_force_ps(const DeltaRequest& request) {
  request.validate();
  if (request.geometry != DeltaGeometry::SpherePlate)
    throw ConfigError("delta_force_ps needs the sphere-plate geometry");
  if (request.method == DeltaMethod::ClosedForm) return closed_form_force(request);
  const SphereGeometry geometry{request.radius_um, request.gap_nm};
  return numeric_difference(request, "N", [&](const CavityConfig& c) {
    return f_ps(geometry, c).total_N;
  });
}

DeltaResult delta(const DeltaRequest& request) {
  return request.geometry == DeltaGeometry::ParallelPlates ? delta_pressure(request)
                                                           : delta_force_ps(request);
}

} // namespace casimir
