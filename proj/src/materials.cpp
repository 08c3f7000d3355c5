#include "casimir/materials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"
#include "reflection_kernel.hpp"

namespace casimir {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

void MaterialModel::validate() const {
  if (kind == MaterialKind::Vacuum) return;
  if (!(omega_p_eV > 0.0) || !std::isfinite(omega_p_eV))
    throw ConfigError("material '" + name + "': omega_p must be positive and finite");
  if (!(gamma_eV >= 0.0) || !std::isfinite(gamma_eV))
    throw ConfigError("material '" + name + "': gamma must be non-negative");
  if (kind == MaterialKind::Superconductor && !(t_c_K > 0.0))
    throw ConfigError("material '" + name + "': superconductor needs t_c > 0");
}

MaterialModel niobium(double gamma_eV) {
  return {MaterialKind::Superconductor, 8.7, gamma_eV, 9.2, "Nb"};
}

MaterialModel gold(double gamma_eV) { return {MaterialKind::Drude, 9.0, gamma_eV, 0.0, "Au"}; }

MaterialModel gold_plasma() { return {MaterialKind::Plasma, 9.0, 0.0, 0.0, "Au-plasma"}; }

MaterialModel ideal_mirror() { return {MaterialKind::Plasma, 1.0e4, 0.0, 0.0, "ideal"}; }

MaterialModel vacuum() { return {MaterialKind::Vacuum, 0.0, 0.0, 0.0, "vacuum"}; }

std::optional<MaterialModel> preset(std::string_view name) {
  const std::string key = lowercase(name);
  if (key == "nb") return niobium();
  if (key == "au") return gold();
  if (key == "au-plasma") return gold_plasma();
  if (key == "ideal") return ideal_mirror();
  if (key == "vacuum") return vacuum();
  return std::nullopt;
}

std::vector<std::string> preset_names() { return {"Nb", "Au", "Au-plasma", "ideal", "vacuum"}; }

std::string_view to_string(MaterialKind kind) {
  switch (kind) {
  case MaterialKind::Vacuum: return "vacuum";
  case MaterialKind::Plasma: return "plasma";
  case MaterialKind::Drude: return "drude";
  case MaterialKind::Superconductor: return "superconductor";
  }
  return "?";
}

std::string_view to_string(ZeroModePrescription prescription) {
  return prescription == ZeroModePrescription::Drude ? "drude" : "plasma";
}

std::optional<MaterialKind> parse_material_kind(std::string_view text) {
  const std::string key = lowercase(text);
  if (key == "vacuum") return MaterialKind::Vacuum;
  if (key == "plasma") return MaterialKind::Plasma;
  if (key == "drude") return MaterialKind::Drude;
  if (key == "superconductor") return MaterialKind::Superconductor;
  return std::nullopt;
}

std::optional<ZeroModePrescription> parse_prescription(std::string_view text) {
  const std::string key = lowercase(text);
  if (key == "drude") return ZeroModePrescription::Drude;
  if (key == "plasma") return ZeroModePrescription::Plasma;
  return std::nullopt;
}

double susceptibility_imaginary(const MaterialModel& model, double xi_eV, double /*temperature_K*/) {
  if (!(xi_eV > 0.0))
    throw DomainError("permittivity requested at xi <= 0; the zero mode has dedicated coefficients");
  const double wp2 = model.omega_p_eV * model.omega_p_eV;
  switch (model.kind) {
  case MaterialKind::Vacuum: return 0.0;
  case MaterialKind::Plasma: return wp2 / (xi_eV * xi_eV);
  case MaterialKind::Drude:
  case MaterialKind::Superconductor: return wp2 / (xi_eV * (xi_eV + model.gamma_eV));
  }
  return 0.0;
}

double permittivity_imaginary(const MaterialModel& model, double xi_eV, double temperature_K) {
  return 1.0 + susceptibility_imaginary(model, xi_eV, temperature_K);
}

double london_depth(const MaterialModel& model, double temperature_K) {
  if (model.kind != MaterialKind::Superconductor)
    throw DomainError("London depth requested for a non-superconducting material");
  if (!(temperature_K >= 0.0) || !(temperature_K < model.t_c_K))
    throw DomainError("London depth diverges at T >= T_c; treat the plate as normal");
  const double reduced = temperature_K / model.t_c_K;
  const double superfluid_fraction = 1.0 - (reduced * reduced) * (reduced * reduced);
  return units::hbar_c_eV_nm / model.omega_p_eV / std::sqrt(superfluid_fraction);
}

FresnelPair fresnel_imaginary(double epsilon, double xi_eV, double k_perp_per_nm) {
  if (!(epsilon >= 1.0) || !(xi_eV >= 0.0) || !(k_perp_per_nm >= 0.0) ||
      (xi_eV == 0.0 && k_perp_per_nm == 0.0))
    throw DomainError("fresnel_imaginary: need eps >= 1, xi >= 0, k >= 0, not both zero");
  // The dimensionless kernel is scale-free, so use y = q, w = xi/(hbar c).
  const double w = xi_eV / units::hbar_c_eV_nm;
  const double q = std::hypot(k_perp_per_nm, w);
  const double chi = epsilon - 1.0;
  return {detail::te_dynamic(chi, w, q).r, detail::tm_dynamic(chi, w, q).r};
}

double te_zero_omega_eff(const PlateState& plate, ZeroModePrescription prescription) {
  const MaterialModel& m = plate.material;
  if (!m.is_metal()) return 0.0;
  if (prescription == ZeroModePrescription::Plasma) return m.omega_p_eV;
  if (plate.superconducting()) return units::hbar_c_eV_nm / london_depth(m, plate.temperature_K);
  return 0.0;
}

double te_zero_reflection(const PlateState& plate, ZeroModePrescription prescription,
                          double k_perp_per_nm) {
  const double w = te_zero_omega_eff(plate, prescription) / units::hbar_c_eV_nm;
  return detail::plasma_form_static(w, k_perp_per_nm).r;
}

double tm_zero_reflection(const PlateState& plate) { return plate.material.is_metal() ? 1.0 : 0.0; }

} // namespace casimir
