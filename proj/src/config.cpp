#include "casimir/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

template <class T>
void take(std::optional<T>& out, const std::optional<T>& primary, const std::optional<T>& fallback) {
  out = primary ? primary : fallback;
}

std::string lowercase(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

double to_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': not a number: '" + text + "'");
  }
}

bool to_bool(const std::string& key, const std::string& text) {
  const std::string v = lowercase(text);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("key '" + key + "': not a boolean: '" + text + "'");
}

void set_run_key(RunOptions& run, const std::string& key, const std::string& value) {
  if (key == "gap-nm") run.gap_nm = to_double(key, value);
  else if (key == "temp-K") run.temp_K = to_double(key, value);
  else if (key == "t1-K") run.t1_K = to_double(key, value);
  else if (key == "t2-K") run.t2_K = to_double(key, value);
  else if (key == "radius-um") run.radius_um = to_double(key, value);
  else if (key == "tol") run.tol = to_double(key, value);
  else if (key == "sum-tol") run.sum_tol = to_double(key, value);
  else if (key == "gamma-eV") run.gamma_eV = to_double(key, value);
  else if (key == "plate1") run.plate1 = value;
  else if (key == "plate2") run.plate2 = value;
  else if (key == "setup") run.setup = value;
  else if (key == "prescription") run.prescription = value;
  else if (key == "geometry") run.geometry = value;
  else if (key == "method") run.method = value;
  else if (key == "force-normal") run.force_normal = to_bool(key, value);
  else if (key == "threads") run.threads = static_cast<unsigned>(to_double(key, value));
  else throw ConfigError("unknown [run] key '" + key + "'");
}

MaterialModel parse_material(const std::string& name, const boost::property_tree::ptree& section) {
  MaterialModel m;
  m.name = name;
  bool have_kind = false;
  for (const auto& [key, node] : section) {
    const std::string value = node.get_value<std::string>();
    if (key == "kind") {
      const auto kind = parse_material_kind(value);
      if (!kind) throw ConfigError("material '" + name + "': unknown kind '" + value + "'");
      m.kind = *kind;
      have_kind = true;
    } else if (key == "omega_p") {
      m.omega_p_eV = to_double(key, value);
    } else if (key == "gamma") {
      m.gamma_eV = to_double(key, value);
    } else if (key == "t_c") {
      m.t_c_K = to_double(key, value);
    } else {
      throw ConfigError("material '" + name + "': unknown key '" + key + "'");
    }
  }
  if (!have_kind) throw ConfigError("material '" + name + "': missing kind");
  m.validate();
  return m;
}

ZeroModePrescription resolve_prescription(const RunOptions& o) {
  const std::string text = o.prescription.value_or("drude");
  const auto p = parse_prescription(text);
  if (!p) throw ConfigError("unknown prescription '" + text + "' (drude | plasma)");
  return *p;
}

double check_tolerance(double tol) {
  if (!(tol > 0.0 && tol <= 1e-4)) throw ConfigError("tolerance must lie in (0, 1e-4]");
  return tol;
}

MaterialModel with_gamma(MaterialModel m, const RunOptions& o) {
  if (o.gamma_eV && (m.kind == MaterialKind::Drude || m.kind == MaterialKind::Superconductor))
    m.gamma_eV = *o.gamma_eV;
  m.validate();
  return m;
}

} // namespace

RunOptions merge(const RunOptions& primary, const RunOptions& fallback) {
  RunOptions out;
  take(out.gap_nm, primary.gap_nm, fallback.gap_nm);
  take(out.temp_K, primary.temp_K, fallback.temp_K);
  take(out.t1_K, primary.t1_K, fallback.t1_K);
  take(out.t2_K, primary.t2_K, fallback.t2_K);
  take(out.radius_um, primary.radius_um, fallback.radius_um);
  take(out.tol, primary.tol, fallback.tol);
  take(out.sum_tol, primary.sum_tol, fallback.sum_tol);
  take(out.gamma_eV, primary.gamma_eV, fallback.gamma_eV);
  take(out.plate1, primary.plate1, fallback.plate1);
  take(out.plate2, primary.plate2, fallback.plate2);
  take(out.setup, primary.setup, fallback.setup);
  take(out.prescription, primary.prescription, fallback.prescription);
  take(out.geometry, primary.geometry, fallback.geometry);
  take(out.method, primary.method, fallback.method);
  take(out.force_normal, primary.force_normal, fallback.force_normal);
  take(out.threads, primary.threads, fallback.threads);
  return out;
}

MaterialRegistry::MaterialRegistry() = default;

void MaterialRegistry::add(const std::string& name, MaterialModel model) {
  model.validate();
  custom_[lowercase(name)] = std::move(model);
}

MaterialModel MaterialRegistry::lookup(const std::string& name) const {
  if (auto it = custom_.find(lowercase(name)); it != custom_.end()) return it->second;
  if (auto m = preset(name)) return *m;
  throw ConfigError("unknown material '" + name + "'");
}

ConfigFile parse_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  ConfigFile file;
  for (const auto& [section, body] : tree) {
    if (section == "run") {
      for (const auto& [key, node] : body) set_run_key(file.run, key, node.get_value<std::string>());
    } else if (section.rfind("material.", 0) == 0) {
      const std::string name = section.substr(9);
      if (name.empty()) throw ConfigError("config: empty material name");
      file.materials.add(name, parse_material(name, body));
    } else {
      throw ConfigError("config: unknown section [" + section + "]");
    }
  }
  return file;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  return parse_config(in);
}

CavityConfig resolve_cavity(const RunOptions& o, const MaterialRegistry& materials) {
  if (!o.gap_nm) throw ConfigError("--gap-nm is required");
  if (!o.temp_K) throw ConfigError("--temp-K is required");
  CavityConfig c;
  c.gap_nm = *o.gap_nm;
  c.temperature_K = *o.temp_K;
  c.plate1 = {with_gamma(materials.lookup(o.plate1.value_or("Au")), o), o.force_normal.value_or(false)};
  c.plate2 = {with_gamma(materials.lookup(o.plate2.value_or("Au")), o), o.force_normal.value_or(false)};
  c.prescription = resolve_prescription(o);
  if (o.tol) c.quad_rel_tol = check_tolerance(*o.tol);
  if (o.sum_tol) c.sum_rel_tol = check_tolerance(*o.sum_tol);
  if (o.threads) c.workers = *o.threads;
  c.validate();
  return c;
}

SphereGeometry resolve_sphere(const RunOptions& o) {
  if (!o.gap_nm) throw ConfigError("--gap-nm is required");
  SphereGeometry g{o.radius_um.value_or(200.0), *o.gap_nm};
  g.validate();
  return g;
}

DeltaRequest resolve_delta(const RunOptions& o, const MaterialRegistry& materials) {
  DeltaRequest r;
  if (o.gamma_eV) {
    r.superconductor = delta_superconductor(*o.gamma_eV);
    r.normal_metal = gold(*o.gamma_eV);
  }
  if (o.plate1) r.superconductor = with_gamma(materials.lookup(*o.plate1), o);
  if (o.plate2) r.normal_metal = with_gamma(materials.lookup(*o.plate2), o);

  const std::string geometry = lowercase(o.geometry.value_or("parallel"));
  if (geometry == "parallel") r.geometry = DeltaGeometry::ParallelPlates;
  else if (geometry == "sphere") r.geometry = DeltaGeometry::SpherePlate;
  else throw ConfigError("unknown geometry '" + geometry + "' (parallel | sphere)");

  const std::string setup = lowercase(o.setup.value_or("nbnb"));
  if (setup == "nbnb") r.setup = Setup::NbNb;
  else if (setup == "nbau") r.setup = Setup::NbAu;
  else throw ConfigError("unknown setup '" + setup + "' (nbnb | nbau)");

  const std::string method = lowercase(o.method.value_or("closed"));
  if (method == "closed") r.method = DeltaMethod::ClosedForm;
  else if (method == "numeric") r.method = DeltaMethod::NumericDifference;
  else throw ConfigError("unknown method '" + method + "' (closed | numeric)");

  r.prescription = resolve_prescription(o);
  if (!o.gap_nm) throw ConfigError("--gap-nm is required");
  r.gap_nm = *o.gap_nm;
  r.radius_um = o.radius_um.value_or(200.0);
  r.t1_K = o.t1_K.value_or(5.0);
  r.t2_K = o.t2_K.value_or(default_t2_fraction * r.superconductor.t_c_K);
  r.force_normal = o.force_normal.value_or(false);
  if (o.tol) r.quad_rel_tol = check_tolerance(*o.tol);
  if (o.sum_tol) r.sum_rel_tol = check_tolerance(*o.sum_tol);
  if (o.threads) r.workers = *o.threads;
  r.validate();
  return r;
}

namespace {

std::string describe_material(const MaterialModel& m) {
  std::ostringstream s;
  s << m.name << " (" << to_string(m.kind) << ", omega_p=" << format_number(m.omega_p_eV)
    << " eV, gamma=" << format_number(m.gamma_eV) << " eV";
  if (m.kind == MaterialKind::Superconductor) s << ", t_c=" << format_number(m.t_c_K) << " K";
  s << ")";
  return s.str();
}

} // namespace

Provenance describe(const CavityConfig& c) {
  return {{"gap_nm", format_number(c.gap_nm)},
          {"temperature_K", format_number(c.temperature_K)},
          {"plate1", describe_material(c.plate1.material) + (c.plate1.force_normal ? " forced-normal" : "")},
          {"plate2", describe_material(c.plate2.material) + (c.plate2.force_normal ? " forced-normal" : "")},
          {"prescription", std::string(to_string(c.prescription))},
          {"quad_rel_tol", format_number(c.quad_rel_tol)},
          {"sum_rel_tol", format_number(c.sum_rel_tol)},
          {"l_max_cap", std::to_string(c.l_max_cap)}};
}

Provenance describe(const SphereGeometry& g) {
  return {{"radius_um", format_number(g.radius_um)}, {"gap_nm", format_number(g.gap_nm)}};
}

Provenance describe(const DeltaRequest& r) {
  Provenance p{{"geometry", std::string(to_string(r.geometry))}};
  if (r.geometry == DeltaGeometry::SpherePlate) p.emplace_back("radius_um", format_number(r.radius_um));
  p.emplace_back("gap_nm", format_number(r.gap_nm));
  p.emplace_back("t1_K", format_number(r.t1_K));
  p.emplace_back("t2_K", format_number(r.t2_K));
  p.emplace_back("setup", std::string(to_string(r.setup)));
  p.emplace_back("prescription", std::string(to_string(r.prescription)));
  p.emplace_back("method", std::string(to_string(r.method)));
  p.emplace_back("force_normal", r.force_normal ? "true" : "false");
  p.emplace_back("superconductor", describe_material(r.superconductor));
  if (r.setup == Setup::NbAu) p.emplace_back("normal_metal", describe_material(r.normal_metal));
  p.emplace_back("quad_rel_tol", format_number(r.quad_rel_tol));
  p.emplace_back("sum_rel_tol", format_number(r.sum_rel_tol));
  return p;
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.11e", value);
  return buffer;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& [key, value] : table.header) out << "# " << key << " = " << value << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

} // namespace casimir
