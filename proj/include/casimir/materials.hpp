#pragma once

// Dielectric response of the plates at imaginary frequency, London
// penetration depth, and the reflection coefficients used by the Lifshitz
// and PFA engines, including the static (zero Matsubara mode) ones.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

enum class MaterialKind {
  Vacuum,          ///< eps == 1; reflects nothing. Used for null-plate checks.
  Plasma,          ///< eps = 1 + Wp^2 / xi^2
  Drude,           ///< eps = 1 + Wp^2 / (xi (xi + gamma))
  Superconductor,  ///< Drude above T_c and at every xi > 0; London zero mode below T_c
};

enum class ZeroModePrescription { Drude, Plasma };

inline constexpr double default_gamma_eV = 0.035;

struct MaterialModel {
  MaterialKind kind = MaterialKind::Drude;
  double omega_p_eV = 9.0;  ///< plasma energy hbar*Omega_P
  double gamma_eV = 0.0;    ///< relaxation energy hbar*gamma
  double t_c_K = 0.0;       ///< critical temperature; Superconductor only
  std::string name;

  /// Throws ConfigError on a violated invariant.
  void validate() const;
  bool is_metal() const { return kind != MaterialKind::Vacuum; }
};

// Presets addressable by name from the command line.
MaterialModel niobium(double gamma_eV = default_gamma_eV);
MaterialModel gold(double gamma_eV = default_gamma_eV);
MaterialModel gold_plasma();
/// Plasma metal with Wp = 1e4 eV, effectively a perfect mirror at the gaps in scope.
MaterialModel ideal_mirror();
MaterialModel vacuum();

/// Case-insensitive lookup of "Nb", "Au", "Au-plasma", "ideal", "vacuum".
std::optional<MaterialModel> preset(std::string_view name);
std::vector<std::string> preset_names();

std::string_view to_string(MaterialKind kind);
std::string_view to_string(ZeroModePrescription prescription);
std::optional<MaterialKind> parse_material_kind(std::string_view text);
std::optional<ZeroModePrescription> parse_prescription(std::string_view text);

/// A plate at a given temperature. force_normal pins a superconductor to its
/// normal-state description regardless of T.
struct PlateState {
  MaterialModel material;
  double temperature_K = 0.0;
  bool force_normal = false;

  bool superconducting() const {
    return !force_normal && material.kind == MaterialKind::Superconductor &&
           temperature_K < material.t_c_K;
  }
};

/// eps(i xi). The temperature argument is accepted for future T-dependent
/// relaxation and is unused by the current models. Throws DomainError for xi <= 0.
double permittivity_imaginary(const MaterialModel& model, double xi_eV, double temperature_K);

/// eps(i xi) - 1, computed without the cancellation of forming eps first.
double susceptibility_imaginary(const MaterialModel& model, double xi_eV, double temperature_K);

/// lambda_L(T) = (hbar c / Wp) (1 - (T/T_c)^4)^(-1/2), in nm.
/// Throws DomainError for T >= T_c or a non-superconducting model.
double london_depth(const MaterialModel& model, double temperature_K);

struct FresnelPair {
  double te;
  double tm;
};

/// Local Fresnel coefficients at imaginary frequency. Sign convention:
/// r_TE = (k_m - q)/(k_m + q), r_TM = (eps q - k_m)/(eps q + k_m), both >= 0.
FresnelPair fresnel_imaginary(double epsilon, double xi_eV, double k_perp_per_nm);

/// Energy hbar*c/lambda that fixes the static TE coefficient
/// r = (sqrt(w^2 + k^2) - k)/(sqrt(w^2 + k^2) + k), w = omega_eff/(hbar c).
/// Returns 0 when the coefficient vanishes identically (normal plate under the
/// Drude prescription, or vacuum).
double te_zero_omega_eff(const PlateState& plate, ZeroModePrescription prescription);

/// Static TE reflection coefficient at transverse wavevector k_perp (nm^-1).
double te_zero_reflection(const PlateState& plate, ZeroModePrescription prescription,
                          double k_perp_per_nm);

/// Static TM reflection coefficient: 1 for any metal, 0 for vacuum.
double tm_zero_reflection(const PlateState& plate);

} // namespace casimir
