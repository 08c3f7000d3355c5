#pragma once

// Plane-parallel Casimir pressure from the finite-temperature Lifshitz
// formula, split into the static TE term, the static TM term and the sum
// over non-zero Matsubara modes. Positive values mean attraction.

#include "casimir/materials.hpp"

namespace casimir {

inline constexpr double min_gap_nm = 10.0;
/// Weight of the l = 0 term in the Matsubara sum.
inline constexpr double zero_mode_weight = 0.5;

struct Plate {
  MaterialModel material;
  bool force_normal = false;
};

struct CavityConfig {
  double gap_nm = 0.0;
  double temperature_K = 0.0;
  Plate plate1;
  Plate plate2;
  ZeroModePrescription prescription = ZeroModePrescription::Drude;
  double quad_rel_tol = 1e-10;
  double sum_rel_tol = 1e-12;
  long l_max_cap = 1'000'000;
  /// Threads used to evaluate Matsubara terms; 0 picks hardware concurrency.
  /// Results are bit-identical for every value.
  unsigned workers = 0;

  void validate() const;
  PlateState state1() const { return {plate1.material, temperature_K, plate1.force_normal}; }
  PlateState state2() const { return {plate2.material, temperature_K, plate2.force_normal}; }
};

struct PressureBreakdown {
  double p0_te_Pa = 0.0;
  double p0_tm_Pa = 0.0;
  double p1_Pa = 0.0;
  double total_Pa = 0.0;
  long l_used = 0;
  double max_quad_error_Pa = 0.0;
};

struct MatsubaraSum {
  double value = 0.0;
  long l_used = 0;
  double max_quad_error = 0.0;
};

/// hbar xi_l = 2 pi k_B T l, in eV.
double matsubara(double temperature_K, long l);

/// Cavity frequency hbar c/(2a) in eV (diagnostic only).
double cavity_frequency(double gap_nm);

/// k_B T zeta(3)/(8 pi a^3) in Pa: the l = 0 TM term for metallic plates.
double p0_tm(double gap_nm, double temperature_K);
/// The same term by quadrature of the l = 0 TM integral.
double p0_tm_numeric(double gap_nm, double temperature_K, double rel_tol = 1e-12);

/// l = 0 TE term (weight 1/2 included) for static coefficients of plasma form
/// with effective energies omega_eff (eV) on each plate. 0 encodes a
/// non-reflecting plate and returns exactly 0; +inf is a perfect reflector.
double p0_te_numeric(double gap_nm, double temperature_K, double omega_eff1_eV,
                     double omega_eff2_eV, double rel_tol);
inline double p0_te_numeric(double gap_nm, double temperature_K, double omega_eff_eV,
                            double rel_tol = 1e-10) {
  return p0_te_numeric(gap_nm, temperature_K, omega_eff_eV, omega_eff_eV, rel_tol);
}

/// Large-Wp expansion of the TE static term,
/// p0_tm * (1 - 6 d/a + 24 d^2/a^2). Throws ValidityError for d/a >= 0.2.
double p0_te_expansion(double gap_nm, double temperature_K, double delta_eff_nm);

/// Sum over l >= 1 in Pa. Throws ConvergenceError at l_max_cap.
MatsubaraSum p1(const CavityConfig& config);

PressureBreakdown pressure(const CavityConfig& config);

} // namespace casimir
