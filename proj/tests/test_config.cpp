#include "doctest.h"

#include <sstream>

#include "casimir/config.hpp"
#include "casimir/errors.hpp"

using namespace casimir;

namespace {

ConfigFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

} // namespace

TEST_CASE("INI run section and custom materials") {
  const auto file = parse(R"(
[material.NbDirty]
kind = superconductor
omega_p = 8.0
gamma = 0.1
t_c = 9.0

[run]
gap-nm = 200
temp-K = 4
plate1 = NbDirty
prescription = plasma
force-normal = yes
)");
  CHECK(*file.run.gap_nm == 200);
  CHECK(*file.run.temp_K == 4);
  CHECK(*file.run.prescription == "plasma");
  CHECK(*file.run.force_normal);
  const MaterialModel m = file.materials.lookup("NbDirty");
  CHECK(m.kind == MaterialKind::Superconductor);
  CHECK(m.omega_p_eV == 8.0);
  CHECK(m.gamma_eV == 0.1);
  CHECK(m.t_c_K == 9.0);

  const CavityConfig c = resolve_cavity(file.run, file.materials);
  CHECK(c.plate1.material.name == "NbDirty");
  CHECK(c.plate2.material.name == "Au");
  CHECK(c.prescription == ZeroModePrescription::Plasma);
  CHECK(c.plate1.force_normal);
}

TEST_CASE("malformed configuration is rejected") {
  CHECK_THROWS_AS(parse("[run]\ngap = 100\n"), ConfigError);
  CHECK_THROWS_AS(parse("[runs]\ngap-nm = 100\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run]\ngap-nm = wide\n"), ConfigError);
  CHECK_THROWS_AS(parse("[material.X]\nomega_p = 9\n"), ConfigError);
  CHECK_THROWS_AS(parse("[material.X]\nkind = metamaterial\n"), ConfigError);
  CHECK_THROWS_AS(parse("[material.X]\nkind = drude\ncolour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse("[run\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/casimir.ini"), ConfigError);
}

TEST_CASE("flags win over the file") {
  RunOptions flags, file;
  flags.gap_nm = 100;
  file.gap_nm = 300;
  file.temp_K = 7;
  const RunOptions m = merge(flags, file);
  CHECK(*m.gap_nm == 100);
  CHECK(*m.temp_K == 7);
  CHECK(!m.plate1);
}

TEST_CASE("registry lookup") {
  MaterialRegistry r;
  CHECK(r.lookup("nb").kind == MaterialKind::Superconductor);
  CHECK_THROWS_AS(r.lookup("unobtainium"), ConfigError);
  MaterialModel custom = gold(0.2);
  custom.name = "Au";
  r.add("Au", custom);
  CHECK(r.lookup("Au").gamma_eV == 0.2);
}

TEST_CASE("resolution applies defaults and validates") {
  MaterialRegistry materials;
  RunOptions o;
  CHECK_THROWS_AS(resolve_cavity(o, materials), ConfigError);
  o.gap_nm = 150;
  o.temp_K = 5;
  o.gamma_eV = 0.07;
  const CavityConfig c = resolve_cavity(o, materials);
  CHECK(c.plate1.material.gamma_eV == 0.07);
  CHECK(c.prescription == ZeroModePrescription::Drude);
  o.tol = 1.0;
  CHECK_THROWS_AS(resolve_cavity(o, materials), ConfigError);
  o.tol.reset();
  o.prescription = "hydro";
  CHECK_THROWS_AS(resolve_cavity(o, materials), ConfigError);

  RunOptions d;
  d.gap_nm = 150;
  const DeltaRequest r = resolve_delta(d, materials);
  CHECK(r.t1_K == 5.0);
  CHECK(r.t2_K == doctest::Approx(0.99 * 9.2));
  CHECK(r.superconductor.omega_p_eV == 9.0);
  d.setup = "NbPb";
  CHECK_THROWS_AS(resolve_delta(d, materials), ConfigError);

  RunOptions s;
  s.gap_nm = 150;
  CHECK(resolve_sphere(s).radius_um == 200.0);
}

TEST_CASE("CSV layout and number formatting") {
  CHECK(format_number(1.0) == "1.00000000000e+00");
  CHECK(format_number(-5.2e-4) == "-5.20000000000e-04");
  CsvTable t;
  t.header = {{"gap_nm", "150"}};
  t.columns = {"a", "b"};
  t.rows = {{"1", "2"}, {"3", "4"}};
  std::ostringstream out;
  write_csv(out, t);
  CHECK(out.str() == "# gap_nm = 150\na,b\n1,2\n3,4\n");
}
