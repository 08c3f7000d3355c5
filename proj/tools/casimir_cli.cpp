// Command-line front end: single pressure/force/delta evaluations, figure
// sweeps and the acceptance suite. All output is CSV with '#' header lines
// echoing the resolved configuration.
//
// Exit codes: 0 ok, 1 validation failure, 2 config error, 3 non-convergence,
// 4 cancellation refusal.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir/config.hpp"
#include "casimir/deltas.hpp"
#include "casimir/errors.hpp"
#include "casimir/figures.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/pfa.hpp"
#include "casimir/validation.hpp"

using namespace casimir;

namespace {

enum ExitCode { ok = 0, validation_failed = 1, config_error = 2, not_converged = 3, refused = 4 };

struct Common {
  RunOptions flags;
  std::string config_path;
  std::string out_path;
  bool gamma_sensitivity = false;
};

template <class T>
void add_optional(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void add_common(CLI::App* app, Common& c) {
  add_optional(app, "--gap-nm", c.flags.gap_nm, "plate separation a in nm");
  add_optional(app, "--temp-K", c.flags.temp_K, "temperature in K");
  add_optional(app, "--t1-K", c.flags.t1_K, "initial temperature in K (delta)");
  add_optional(app, "--t2-K", c.flags.t2_K, "final temperature in K (delta; default 0.99 T_c)");
  add_optional(app, "--plate1", c.flags.plate1, "Nb | Au | Au-plasma | ideal | vacuum | custom name");
  add_optional(app, "--plate2", c.flags.plate2, "material of the second plate");
  add_optional(app, "--setup", c.flags.setup, "nbnb | nbau (delta)");
  add_optional(app, "--prescription", c.flags.prescription, "drude | plasma");
  add_optional(app, "--geometry", c.flags.geometry, "parallel | sphere (delta)");
  add_optional(app, "--radius-um", c.flags.radius_um, "sphere radius in um");
  add_optional(app, "--method", c.flags.method, "closed | numeric (delta)");
  add_optional(app, "--tol", c.flags.tol, "relative quadrature tolerance");
  add_optional(app, "--sum-tol", c.flags.sum_tol, "relative Matsubara truncation tolerance");
  add_optional(app, "--gamma-eV", c.flags.gamma_eV, "override the relaxation energy of Drude metals");
  add_optional(app, "--threads", c.flags.threads, "worker threads (0 = all cores)");
  app->add_flag_function(
      "--force-normal", [&c](std::int64_t n) { c.flags.force_normal = n > 0; },
      "treat superconductors as normal at every temperature");
  app->add_option("--config", c.config_path, "INI configuration file");
  app->add_option("--out", c.out_path, "output CSV path (default stdout)");
}

std::pair<RunOptions, MaterialRegistry> resolve(const Common& c) {
  if (c.config_path.empty()) return {c.flags, MaterialRegistry{}};
  ConfigFile file = load_config(c.config_path);
  return {merge(c.flags, file.run), file.materials};
}

void emit(const Common& c, const CsvTable& table) {
  if (c.out_path.empty()) {
    write_csv(std::cout, table);
    return;
  }
  std::ofstream out(c.out_path);
  if (!out) throw ConfigError("cannot write " + c.out_path);
  write_csv(out, table);
  if (!out) throw ConfigError("write failed for " + c.out_path);
}

std::vector<double> gamma_scales(const Common& c) {
  return c.gamma_sensitivity ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0};
}

MaterialModel scale_gamma(MaterialModel m, double factor) {
  m.gamma_eV *= factor;
  return m;
}

int cmd_pressure(const Common& c) {
  auto [options, materials] = resolve(c);
  const CavityConfig base = resolve_cavity(options, materials);
  CsvTable table;
  table.header = describe(base);
  table.columns = {"gamma_scale", "p0_te_Pa", "p0_tm_Pa", "p1_Pa", "total_Pa", "l_used",
                   "max_quad_error_Pa"};
  for (double scale : gamma_scales(c)) {
    CavityConfig config = base;
    config.plate1.material = scale_gamma(config.plate1.material, scale);
    config.plate2.material = scale_gamma(config.plate2.material, scale);
    const PressureBreakdown p = pressure(config);
    table.rows.push_back({format_number(scale), format_number(p.p0_te_Pa), format_number(p.p0_tm_Pa),
                          format_number(p.p1_Pa), format_number(p.total_Pa), std::to_string(p.l_used),
                          format_number(p.max_quad_error_Pa)});
  }
  emit(c, table);
  return ok;
}

int cmd_force(const Common& c) {
  auto [options, materials] = resolve(c);
  const CavityConfig base = resolve_cavity(options, materials);
  const SphereGeometry geometry = resolve_sphere(options);
  CsvTable table;
  table.header = describe(geometry);
  const Provenance cavity = describe(base);
  table.header.insert(table.header.end(), cavity.begin() + 1, cavity.end());
  table.columns = {"gamma_scale", "f0_te_N", "f0_tm_N", "f1_N", "total_N", "l_used",
                   "max_quad_error_N"};
  for (double scale : gamma_scales(c)) {
    CavityConfig config = base;
    config.plate1.material = scale_gamma(config.plate1.material, scale);
    config.plate2.material = scale_gamma(config.plate2.material, scale);
    const ForceBreakdown f = f_ps(geometry, config);
    table.rows.push_back({format_number(scale), format_number(f.f0_te_N), format_number(f.f0_tm_N),
                          format_number(f.f1_N), format_number(f.total_N), std::to_string(f.l_used),
                          format_number(f.max_quad_error_N)});
  }
  emit(c, table);
  return ok;
}

int cmd_delta(const Common& c) {
  auto [options, materials] = resolve(c);
  const DeltaRequest request = resolve_delta(options, materials);
  const DeltaResult result = delta(request);
  CsvTable table;
  table.header = describe(request);
  table.columns = {"value", "unit"};
  std::vector<std::string> row{format_number(result.value), result.unit};
  for (const auto& term : result.breakdown) {
    table.columns.push_back(term.name);
    row.push_back(format_number(term.value));
  }
  table.columns.insert(table.columns.end(), {"cancellation_flag", "digits_lost"});
  row.push_back(result.cancellation_flag ? "true" : "false");
  row.push_back(format_number(result.digits_lost));
  table.rows.push_back(std::move(row));
  emit(c, table);
  return ok;
}

int cmd_figure(const Common& c, int id) {
  const SweepSpec spec = figure_sweep(id, c.flags.threads.value_or(0), c.flags.t2_K);
  const RunReport report = run_sweep(spec);
  emit(c, figure_table(id, report));
  std::cerr << "figure " << id << ": " << report.rows.size() << " rows in " << report.seconds << " s\n";
  return ok;
}

int cmd_validate(const std::vector<std::string>& only) {
  const auto results = run_acceptance(only);
  return print_report(std::cout, results) ? ok : validation_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal Casimir interaction in normal and superconducting cavities"};
  app.require_subcommand(1);

  Common common;
  auto* pressure_cmd = app.add_subcommand("pressure", "plane-parallel pressure breakdown");
  add_common(pressure_cmd, common);
  pressure_cmd->add_flag("--gamma-sensitivity", common.gamma_sensitivity,
                         "also evaluate with gamma/2 and 2 gamma");

  auto* force_cmd = app.add_subcommand("force", "sphere-plate PFA force breakdown");
  add_common(force_cmd, common);
  force_cmd->add_flag("--gamma-sensitivity", common.gamma_sensitivity,
                      "also evaluate with gamma/2 and 2 gamma");

  auto* delta_cmd = app.add_subcommand("delta", "temperature-change differential");
  add_common(delta_cmd, common);

  int figure_id = 0;
  auto* figure_cmd = app.add_subcommand("figure", "reproduce a figure sweep as CSV");
  figure_cmd->add_option("id", figure_id, "figure number 1-4")->required();
  figure_cmd->add_option("--out", common.out_path, "output CSV path (default stdout)");
  add_optional(figure_cmd, "--t2-K", common.flags.t2_K, "final temperature in K (default T_c)");
  add_optional(figure_cmd, "--threads", common.flags.threads, "worker threads (0 = all cores)");

  std::vector<std::string> only;
  auto* validate_cmd = app.add_subcommand("validate", "run the acceptance criteria");
  validate_cmd->add_option("--only", only, "criterion id(s) to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return config_error;
  }

  try {
    if (*pressure_cmd) return cmd_pressure(common);
    if (*force_cmd) return cmd_force(common);
    if (*delta_cmd) return cmd_delta(common);
    if (*figure_cmd) return cmd_figure(common, figure_id);
    if (*validate_cmd) return cmd_validate(only);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (partial sum " << e.partial_sum() << ", last term "
              << e.last_term() << ")\n";
    return not_converged;
  } catch (const CancellationError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return refused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  }
  return config_error;
}
