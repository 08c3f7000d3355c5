// Drives the command-line binary and checks exit codes and output.
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(CASIMIR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string last_line(const std::string& s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - start);
}

double first_field(const std::string& line) { return std::stod(line.substr(0, line.find(','))); }

} // namespace

TEST_CASE("pressure command") {
  const auto r = run("pressure --gap-nm 1000 --temp-K 300 --plate1 Au --plate2 Au");
  CHECK(r.status == 0);
  CHECK(r.out.find("# gap_nm = 1.00000000000e+03") != std::string::npos);
  CHECK(r.out.find("gamma_scale,p0_te_Pa,p0_tm_Pa,p1_Pa,total_Pa") != std::string::npos);
  const auto g = run("pressure --gap-nm 1000 --temp-K 300 --gamma-sensitivity");
  CHECK(g.status == 0);
  CHECK(g.out.find("5.00000000000e-01,") != std::string::npos);
  CHECK(g.out.find("2.00000000000e+00,") != std::string::npos);
}

TEST_CASE("delta command: Drude Nb-Nb sphere-plate") {
  const auto r = run("delta --geometry sphere --radius-um 200 --gap-nm 150 --t1-K 5 --setup nbnb "
                     "--prescription drude");
  CHECK(r.status == 0);
  const double v = first_field(last_line(r.out));
  CHECK(v == doctest::Approx(-8e-14).epsilon(0.25));
}

TEST_CASE("exit codes") {
  CHECK(run("pressure --gap-nm 5 --temp-K 300").status == 2);
  CHECK(run("pressure --gap-nm 100 --temp-K 300 --plate1 unobtainium").status == 2);
  CHECK(run("pressure --gap-nm 100").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("delta --gap-nm 100 --t1-K 5 --t2-K 9.2 --prescription plasma --method numeric").status ==
        4);
  CHECK(run("validate --only plasma-te-reflection").status == 0);
  CHECK(run("validate --only no-such-criterion").status == 2);
}

TEST_CASE("config file merges under flags") {
  const std::string path = "cli_test_config.ini";
  {
    std::ofstream f(path);
    f << "[material.Soft]\nkind = drude\nomega_p = 5\ngamma = 0.05\n\n[run]\ngap-nm = 400\ntemp-K = 300\n"
         "plate1 = Soft\n";
  }
  const auto from_file = run("pressure --config " + path);
  CHECK(from_file.status == 0);
  CHECK(from_file.out.find("# gap_nm = 4.00000000000e+02") != std::string::npos);
  CHECK(from_file.out.find("Soft (drude") != std::string::npos);
  const auto overridden = run("pressure --config " + path + " --gap-nm 500");
  CHECK(overridden.out.find("# gap_nm = 5.00000000000e+02") != std::string::npos);
  CHECK(run("pressure --config missing.ini --gap-nm 100 --temp-K 300").status == 2);
  std::remove(path.c_str());
}

TEST_CASE("figure output is byte-deterministic") {
  const auto a = run("figure 1 --threads 1");
  const auto b = run("figure 1 --threads 2");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("T1_K,dP_Dr_NbNb_mPa,dP_Dr_NbAu_mPa") != std::string::npos);
  std::size_t rows = 0;
  for (char c : a.out) rows += c == '\n';
  CHECK(rows > 81);
}
