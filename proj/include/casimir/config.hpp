#pragma once

// Run configuration for the command-line front end. Options come from
// flags and from an optional INI file:
//
//   [material.NbDirty]
//   kind = superconductor
//   omega_p = 8.7
//   gamma = 0.1
//   t_c = 9.2
//
//   [run]
//   gap-nm = 150
//   prescription = drude
//
// Keys under [run] use the flag names without the leading dashes. Flags win
// over the file.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/deltas.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/pfa.hpp"

namespace casimir {

struct RunOptions {
  std::optional<double> gap_nm;
  std::optional<double> temp_K;
  std::optional<double> t1_K;
  std::optional<double> t2_K;
  std::optional<double> radius_um;
  std::optional<double> tol;
  std::optional<double> sum_tol;
  std::optional<double> gamma_eV;
  std::optional<std::string> plate1;
  std::optional<std::string> plate2;
  std::optional<std::string> setup;
  std::optional<std::string> prescription;
  std::optional<std::string> geometry;
  std::optional<std::string> method;
  std::optional<bool> force_normal;
  std::optional<unsigned> threads;
};

/// Field-wise: a value present in `primary` wins over `fallback`.
RunOptions merge(const RunOptions& primary, const RunOptions& fallback);

class MaterialRegistry {
public:
  MaterialRegistry();  ///< presets only
  void add(const std::string& name, MaterialModel model);
  /// Custom entries shadow presets. Throws ConfigError for unknown names.
  MaterialModel lookup(const std::string& name) const;

private:
  std::map<std::string, MaterialModel> custom_;
};

struct ConfigFile {
  MaterialRegistry materials;
  RunOptions run;
};

/// Throws ConfigError on unreadable files, malformed INI, unknown keys or
/// bad values.
ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::filesystem::path& path);

using Provenance = std::vector<std::pair<std::string, std::string>>;

/// Resolution helpers: apply defaults, then validate. Throw ConfigError.
CavityConfig resolve_cavity(const RunOptions& options, const MaterialRegistry& materials);
SphereGeometry resolve_sphere(const RunOptions& options);
DeltaRequest resolve_delta(const RunOptions& options, const MaterialRegistry& materials);

Provenance describe(const CavityConfig& config);
Provenance describe(const SphereGeometry& geometry);
Provenance describe(const DeltaRequest& request);

// CSV emission: '#'-prefixed "key = value" lines, a column-name row, then
// data rows. Numbers use scientific notation with 12 significant digits.
std::string format_number(double value);

struct CsvTable {
  Provenance header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);

} // namespace casimir
