#pragma once

// Shared Matsubara machinery for the pressure (Lifshitz) and the PFA force.
// Both quantities reduce, per mode, to a one-dimensional integral over
// y = 2 a q on [w_l, w_l + y_window] of a polynomial weight times a kernel
// built from the reflection coefficients.

#include "casimir/lifshitz.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::detail {

enum class Quantity {
  Pressure,        ///< eV/nm^3
  ForcePerRadius,  ///< eV/nm^2 (multiply by R in nm for eV/nm)
};

/// exp(-60) ~ 1e-26 makes the truncated tail negligible.
inline constexpr double y_window = 60.0;

/// Static-mode integral (l = 0 TE) for plasma-form coefficients, including
/// the 1/2 weight and thermal prefactor, in internal units.
QuadratureResult zero_mode_te(Quantity quantity, double gap_nm, double temperature_K,
                              double omega_eff1_eV, double omega_eff2_eV, double rel_tol);

/// Static-mode integral (l = 0 TM, r = 1 on both plates), weighted, internal units.
QuadratureResult zero_mode_tm(Quantity quantity, double gap_nm, double temperature_K,
                              double rel_tol);

/// Sum over l >= 1 in internal units, with the same stopping rule for both
/// quantities.
MatsubaraSum nonzero_modes(Quantity quantity, const CavityConfig& config);

} // namespace casimir::detail
