#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

CavityConfig cavity(const MaterialModel& m1, const MaterialModel& m2, double a, double T,
                    ZeroModePrescription p = ZeroModePrescription::Drude) {
  CavityConfig c;
  c.gap_nm = a;
  c.temperature_K = T;
  c.plate1 = {m1, false};
  c.plate2 = {m2, false};
  c.prescription = p;
  c.workers = 1;
  return c;
}

double p0_tm_oracle(double a, double T) {
  return oracle::k_B * T * oracle::zeta3() / (8 * oracle::pi * a * a * a) * oracle::eV_nm3_Pa;
}

} // namespace

TEST_CASE("Matsubara energies") {
  CHECK(matsubara(300, 0) == 0.0);
  CHECK(matsubara(300, 1) == doctest::Approx(2 * oracle::pi * oracle::k_B * 300).epsilon(1e-15));
  CHECK(matsubara(300, 1) > 0.155);
  CHECK(matsubara(300, 1) < 0.165);
  CHECK(cavity_frequency(100) == doctest::Approx(oracle::hbar_c / 200));
}

TEST_CASE("static TM term") {
  CHECK(p0_tm(1000, 300) == doctest::Approx(1.981e-4).epsilon(1e-3));
  CHECK(p0_tm(1000, 300) == doctest::Approx(p0_tm_oracle(1000, 300)).epsilon(1e-13));
  CHECK(p0_tm(500, 300) / p0_tm(1000, 300) == doctest::Approx(8.0).epsilon(1e-14));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ga(10, 5000), gT(0.1, 400);
  for (int i = 0; i < 10; ++i) {
    const double a = ga(rng), T = gT(rng);
    CHECK(std::abs(p0_tm_numeric(a, T) / p0_tm_oracle(a, T) - 1) < 1e-10);
  }
}

TEST_CASE("static TE term: limits and independent quadrature") {
  const double a = 200, T = 5;
  CHECK(p0_te_numeric(a, T, 0.0) == 0.0);
  CHECK(p0_te_numeric(a, T, 9.0, 0.0, 1e-10) == 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(p0_te_numeric(a, T, inf) == doctest::Approx(p0_tm(a, T)).epsilon(1e-9));
  CHECK_THROWS_AS(p0_te_numeric(a, T, -1.0), DomainError);
  for (double omega : {0.5, 2.0, 9.0}) {
    const double got = p0_te_numeric(a, T, omega);
    CHECK(got == doctest::Approx(oracle::p0_te_simpson(a, T, omega, omega)).epsilon(1e-8));
    CHECK(got < p0_tm(a, T));
  }
  CHECK(p0_te_numeric(a, T, 9.0, 2.0, 1e-10) ==
        doctest::Approx(oracle::p0_te_simpson(a, T, 9.0, 2.0)).epsilon(1e-8));
  // Increasing in omega.
  CHECK(p0_te_numeric(a, T, 1.0) < p0_te_numeric(a, T, 2.0));
}

TEST_CASE("static TE term: large-Wp expansion") {
  const double T = 5;
  const double delta = oracle::hbar_c / 9.0;
  const double a = 150;
  const double x = delta / a;
  CHECK(p0_te_expansion(a, T, delta) / p0_tm(a, T) ==
        doctest::Approx(1 - 6 * x + 24 * x * x).epsilon(1e-14));
  CHECK(1 - 6 * x + 24 * x * x == doctest::Approx(0.636).epsilon(1e-3));
  CHECK_THROWS_AS(p0_te_expansion(100, T, delta), ValidityError);
  // At small delta/a the expansion tracks the quadrature; its error is third
  // order in delta/a with a coefficient near 80.
  const double a_far = 100 * delta;
  const double rel = std::abs(p0_te_expansion(a_far, T, delta) / p0_te_numeric(a_far, T, 9.0) - 1);
  CHECK(rel < 1e-4);
  CHECK(rel > 1e-5);
}

TEST_CASE("non-zero modes vanish for a transparent plate") {
  const auto s = p1(cavity(gold(), vacuum(), 150, 5));
  CHECK(s.value == 0.0);
  const auto p = pressure(cavity(vacuum(), vacuum(), 150, 5));
  CHECK(p.total_Pa == 0.0);
}

TEST_CASE("ideal mirrors reproduce the zero-temperature Casimir pressure") {
  const auto p = pressure(cavity(ideal_mirror(), ideal_mirror(), 500, 1, ZeroModePrescription::Plasma));
  CHECK(std::abs(p.total_Pa / oracle::ideal_pressure(500) - 1) < 5e-3);
}

TEST_CASE("pressure is positive and decreases with the gap") {
  double prev = INFINITY;
  for (double a : {100.0, 200.0, 400.0, 800.0}) {
    const auto p = pressure(cavity(gold(), gold(), a, 300));
    CHECK(p.total_Pa > 0);
    CHECK(p.total_Pa < prev);
    CHECK(p.total_Pa == doctest::Approx(p.p0_te_Pa + p.p0_tm_Pa + p.p1_Pa).epsilon(1e-15));
    prev = p.total_Pa;
  }
}

TEST_CASE("prescription gap is exactly the plasma static TE term") {
  const auto dr = pressure(cavity(gold(), gold(), 300, 300, ZeroModePrescription::Drude));
  const auto pl = pressure(cavity(gold(), gold(), 300, 300, ZeroModePrescription::Plasma));
  CHECK(dr.total_Pa <= pl.total_Pa);
  CHECK(dr.p0_te_Pa == 0.0);
  CHECK(std::abs((pl.total_Pa - dr.total_Pa) / pl.p0_te_Pa - 1) < 1e-6);
}

TEST_CASE("superconductivity only enters through the static TE term") {
  const MaterialModel nb = niobium();
  CavityConfig sc = cavity(nb, nb, 150, 5, ZeroModePrescription::Plasma);
  CavityConfig n = sc;
  n.plate1.force_normal = n.plate2.force_normal = true;
  const auto a = pressure(sc), b = pressure(n);
  CHECK(a.total_Pa == b.total_Pa);
  CHECK(a.p0_te_Pa == b.p0_te_Pa);

  sc.prescription = n.prescription = ZeroModePrescription::Drude;
  const auto c = pressure(sc), d = pressure(n);
  CHECK(c.p1_Pa == d.p1_Pa);
  CHECK(c.p0_tm_Pa == d.p0_tm_Pa);
  CHECK(d.p0_te_Pa == 0.0);
  CHECK(c.p0_te_Pa > 0.0);
}

TEST_CASE("Drude pressure is continuous across T_c") {
  const MaterialModel nb = niobium();
  const double below = pressure(cavity(nb, nb, 150, nb.t_c_K - 1e-3)).total_Pa;
  const double above = pressure(cavity(nb, nb, 150, nb.t_c_K + 1e-3)).total_Pa;
  CHECK(std::abs(below - above) / above < 1e-6);
}

TEST_CASE("worker count does not change a single bit") {
  CavityConfig c = cavity(gold(), niobium(), 150, 5);
  const auto one = pressure(c);
  c.workers = 3;
  const auto three = pressure(c);
  CHECK(one.total_Pa == three.total_Pa);
  CHECK(one.l_used == three.l_used);
}

TEST_CASE("cryogenic sums need thousands of terms; the cap is enforced") {
  CavityConfig c = cavity(gold(), gold(), 150, 5);
  const auto s = p1(c);
  CHECK(s.l_used > 1000);
  CHECK(s.l_used < 20000);
  c.l_max_cap = 50;
  try {
    p1(c);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.terms() == 50);
    CHECK(e.partial_sum() > 0);
    CHECK(e.last_term() > 0);
  }
}

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(pressure(cavity(gold(), gold(), 9.9, 300)), ConfigError);
  CHECK_THROWS_AS(pressure(cavity(gold(), gold(), 100, 0)), ConfigError);
  CavityConfig c = cavity(gold(), gold(), 100, 300);
  c.quad_rel_tol = 0.1;
  CHECK_THROWS_AS(pressure(c), ConfigError);
  c = cavity(gold(), gold(), 100, 300);
  c.sum_rel_tol = 0.0;
  CHECK_THROWS_AS(pressure(c), ConfigError);
  CHECK(zero_mode_weight == 0.5);
}
