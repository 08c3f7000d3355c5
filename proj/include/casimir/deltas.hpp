#pragma once

// Temperature-change differentials of the Casimir interaction in a cavity
// with one or two superconducting plates: Delta P for parallel plates and
// Delta F for the sphere-plate geometry, between T1 and T2 <= T_c.
//
// ClosedForm assembles the low-temperature perturbative results plus the
// exactly computed change of the superconducting TE static term.
// NumericDifference subtracts two full Lifshitz/PFA evaluations and refuses
// when the expected change is below what the arithmetic can resolve.

#include <string>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

enum class DeltaGeometry { ParallelPlates, SpherePlate };
enum class Setup { NbNb, NbAu };
enum class DeltaMethod { ClosedForm, NumericDifference };

std::string_view to_string(DeltaGeometry geometry);
std::string_view to_string(Setup setup);
std::string_view to_string(DeltaMethod method);

/// Plasma energy shared by both metals in the differential formulas.
inline constexpr double common_omega_p_eV = 9.0;
/// Default T2 as a fraction of T_c.
inline constexpr double default_t2_fraction = 0.99;

/// Nb with the common plasma energy, as used throughout the differentials.
MaterialModel delta_superconductor(double gamma_eV = default_gamma_eV);

struct DeltaRequest {
  DeltaGeometry geometry = DeltaGeometry::ParallelPlates;
  double radius_um = 200.0;  ///< SpherePlate only
  double gap_nm = 150.0;
  double t1_K = 5.0;
  double t2_K = default_t2_fraction * 9.2;
  Setup setup = Setup::NbNb;
  ZeroModePrescription prescription = ZeroModePrescription::Drude;
  DeltaMethod method = DeltaMethod::ClosedForm;
  /// Evaluate the superconducting plates in their normal-state description.
  bool force_normal = false;
  MaterialModel superconductor = delta_superconductor();
  MaterialModel normal_metal = gold();
  double quad_rel_tol = 1e-10;
  double sum_rel_tol = 1e-12;
  long l_max_cap = 1'000'000;
  unsigned workers = 0;

  void validate() const;
};

struct DeltaTerm {
  std::string name;
  double value;
};

struct DeltaResult {
  double value = 0.0;
  std::string unit;  ///< "Pa" or "N"
  std::vector<DeltaTerm> breakdown;
  /// NumericDifference only: set when the subtraction loses more than
  /// three significant digits.
  bool cancellation_flag = false;
  double digits_lost = 0.0;

  double term(std::string_view name) const;
};

struct DerivedScales {
  double t_eff_K;        ///< k_B T_eff = hbar c / (2a)
  double delta_skin_nm;  ///< hbar c / Wp
};

DerivedScales derived_scales(double gap_nm, double omega_p_eV = common_omega_p_eV);

/// Delta F_pp of the normal-metal plasma-model cavity (negative for t2 > t1),
/// in Pa. Valid for k_B T2 a/(hbar c) < 0.05 and delta/a < 0.25; throws
/// ValidityError otherwise.
double delta_fpp_perturbative(double gap_nm, double t1_K, double t2_K,
                              double omega_p_eV = common_omega_p_eV);

/// Leading factor of delta_fpp_perturbative: pi^2 k_B^4 (T2^4 - T1^4)/(45 hbar^3 c^3), Pa.
double delta_fpp_leading(double t1_K, double t2_K);

/// R * Delta1 F_ps * Delta2 F_ps for the plasma-model sphere-plate system, in N.
double delta_fps_perturbative(double gap_nm, double radius_um, double t1_K, double t2_K,
                              double omega_p_eV = common_omega_p_eV);

/// Delta1 F_ps = zeta(3) k_B^3 (T2 - T1)(T1^2 + T2^2)/(hbar c)^2, in N/m.
double delta_fps_leading(double t1_K, double t2_K);

DeltaResult delta_pressure(const DeltaRequest& request);
DeltaResult delta_force_ps(const DeltaRequest& request);
/// Dispatches on request.geometry.
DeltaResult delta(const DeltaRequest& request);

/// Relative change below which NumericDifference refuses to subtract.
double cancellation_floor(double quad_rel_tol);

} // namespace casimir
