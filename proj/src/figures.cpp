#include "casimir/figures.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr std::size_t max_grid_points = 10'000;

double figure_value(int id, double value, double radius_um) {
  if (id <= 2) return value * 1e3;                 // Pa -> mPa
  return value / (radius_um * 1e-6) / 1e-10;       // N -> 1e-10 N/m per unit radius
}

} // namespace

void SweepSpec::validate() const {
  if (grid.empty() || grid.size() > max_grid_points)
    throw ConfigError("sweep grid must hold between 1 and 10000 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw ConfigError("sweep grid must be strictly increasing");
}

RunReport run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();

  auto evaluate = [&spec](double x) {
    DeltaRequest r = spec.fixed;
    if (spec.swept == SweptVariable::Gap) r.gap_nm = x;
    else r.t1_K = x;
    RunRow row{x, 0.0, 0.0, 0.0};
    r.prescription = ZeroModePrescription::Drude;
    r.setup = Setup::NbNb;
    row.drude_nbnb = delta(r).value;
    r.setup = Setup::NbAu;
    row.drude_nbau = delta(r).value;
    r.prescription = ZeroModePrescription::Plasma;
    r.setup = Setup::NbNb;
    row.plasma = delta(r).value;
    return row;
  };

  const std::size_t n = spec.grid.size();
  std::vector<RunRow> rows(n);
  const unsigned threads =
      spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> tasks;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) {
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < n; i += threads) rows[i] = evaluate(spec.grid[i]);
    }));
  }
  for (auto& task : tasks) task.get();

  RunReport report;
  report.rows = std::move(rows);
  report.provenance = describe(spec.fixed);
  report.provenance.emplace_back("swept", spec.swept == SweptVariable::Gap ? "gap_nm" : "t1_K");
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1) throw ConfigError("grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = lo + (hi - lo) * i / (points - 1);
  return grid;
}

SweepSpec figure_sweep(int id, unsigned threads, std::optional<double> t2_K) {
  if (id < 1 || id > 4) throw ConfigError("figure id must be 1, 2, 3 or 4");
  SweepSpec spec;
  spec.threads = threads;
  spec.fixed.method = DeltaMethod::ClosedForm;
  spec.fixed.geometry = id <= 2 ? DeltaGeometry::ParallelPlates : DeltaGeometry::SpherePlate;
  spec.fixed.radius_um = 200.0;
  spec.fixed.t2_K = t2_K.value_or(spec.fixed.superconductor.t_c_K);
  if (id == 1 || id == 3) {
    spec.swept = SweptVariable::T1;
    spec.fixed.gap_nm = 150.0;
    spec.grid = linear_grid(1.0, 9.0, figure_points);
  } else {
    spec.swept = SweptVariable::Gap;
    spec.fixed.t1_K = 5.0;
    spec.grid = linear_grid(100.0, 2000.0, figure_points);
  }
  return spec;
}

CsvTable figure_table(int id, const RunReport& report) {
  if (id < 1 || id > 4) throw ConfigError("figure id must be 1, 2, 3 or 4");
  CsvTable table;
  table.header = {{"figure", std::to_string(id)}};
  table.header.insert(table.header.end(), report.provenance.begin(), report.provenance.end());

  const bool vs_t1 = id == 1 || id == 3;
  const std::string x = vs_t1 ? "T1_K" : "a_um";
  if (id <= 2) table.columns = {x, "dP_Dr_NbNb_mPa", "dP_Dr_NbAu_mPa"};
  else table.columns = {x, "dF_over_R_NbNb_1e-10_N_per_m", "dF_over_R_NbAu_1e-10_N_per_m"};

  double radius_um = 200.0;
  for (const auto& [key, value] : report.provenance)
    if (key == "radius_um") radius_um = std::stod(value);

  for (const RunRow& row : report.rows) {
    const double swept = vs_t1 ? row.swept : row.swept / 1e3;
    table.rows.push_back({format_number(swept),
                          format_number(figure_value(id, row.drude_nbnb, radius_um)),
                          format_number(figure_value(id, row.drude_nbau, radius_um))});
  }
  return table;
}

} // namespace casimir
