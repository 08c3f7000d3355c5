#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/figures.hpp"

using namespace casimir;

TEST_CASE("grids and sweep validation") {
  const auto g = linear_grid(1, 9, 81);
  CHECK(g.size() == 81);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 9.0);
  CHECK(g[40] == doctest::Approx(5.0));
  SweepSpec s = figure_sweep(1);
  s.grid = {2, 1};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  CHECK_THROWS_AS(figure_sweep(5), ConfigError);
}

TEST_CASE("figure sweeps run at T2 = T_c unless overridden") {
  CHECK(figure_sweep(1).fixed.t2_K == 9.2);
  CHECK(figure_sweep(2, 0, 9.0).fixed.t2_K == 9.0);
  CHECK(figure_sweep(3).fixed.geometry == DeltaGeometry::SpherePlate);
  CHECK(figure_sweep(2).swept == SweptVariable::Gap);
}

TEST_CASE("figure 3 row at T1 = 5 K") {
  SweepSpec spec = figure_sweep(3);
  spec.grid = {5.0};
  const CsvTable t = figure_table(3, run_sweep(spec));
  REQUIRE(t.rows.size() == 1);
  CHECK(t.columns[2] == "dF_over_R_NbAu_1e-10_N_per_m");
  CHECK(std::stod(t.rows[0][2]) == doctest::Approx(-2.6).epsilon(0.02));
}

TEST_CASE("rows come back in grid order and are deterministic") {
  SweepSpec spec = figure_sweep(2);
  spec.grid = {100, 400, 700, 1000, 1300};
  spec.threads = 1;
  const auto serial = figure_table(2, run_sweep(spec));
  spec.threads = 4;
  const auto parallel = figure_table(2, run_sweep(spec));
  std::ostringstream a, b;
  write_csv(a, serial);
  write_csv(b, parallel);
  CHECK(a.str() == b.str());
  CHECK(serial.rows[0][0] == "1.00000000000e-01");
  CHECK(serial.rows[4][0] == "1.30000000000e+00");
}
