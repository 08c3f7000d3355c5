#include "doctest.h"

#include <cmath>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/pfa.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

CavityConfig cavity(const MaterialModel& m, double a, double T,
                    ZeroModePrescription p = ZeroModePrescription::Drude) {
  CavityConfig c;
  c.gap_nm = a;
  c.temperature_K = T;
  c.plate1 = c.plate2 = {m, false};
  c.prescription = p;
  return c;
}

} // namespace

TEST_CASE("ideal-mirror PFA force") {
  const SphereGeometry g{200, 500};
  const auto f = f_ps(g, cavity(ideal_mirror(), 500, 1, ZeroModePrescription::Plasma));
  CHECK(std::abs(f.total_N / oracle::ideal_pfa_force(500, 2e5) - 1) < 5e-3);
}

TEST_CASE("static TM force") {
  const SphereGeometry g{200, 1000};
  CHECK(f0_tm_ps(g, 300) == doctest::Approx(1.245e-13).epsilon(1e-3));
  const double oracle_value =
      oracle::k_B * 300 * 2e5 * oracle::zeta3() / (8 * 1e6) * oracle::eV_nm_N;
  CHECK(f0_tm_ps(g, 300) == doctest::Approx(oracle_value).epsilon(1e-13));
  CHECK(f0_tm_ps_numeric(g, 300) == doctest::Approx(oracle_value).epsilon(1e-10));
  CHECK(f0_tm_ps(SphereGeometry{200, 500}, 300) / f0_tm_ps(g, 300) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("force is exactly linear in R") {
  const auto c = cavity(gold(), 300, 300);
  const auto f1 = f_ps({100, 300}, c);
  const auto f2 = f_ps({200, 300}, c);
  CHECK(f2.total_N == 2 * f1.total_N);
  CHECK(f2.f1_N == 2 * f1.f1_N);
}

TEST_CASE("static TE force below static TM force") {
  const SphereGeometry g{200, 150};
  for (double omega : {0.1, 1.0, 9.0, 1e4}) CHECK(f0_te_ps(g, 5, omega) <= f0_tm_ps(g, 5));
  CHECK(f0_te_ps(g, 5, 0.0) == 0.0);
  const auto f = f_ps(g, cavity(gold(), 150, 300, ZeroModePrescription::Plasma));
  CHECK(f.f0_te_N <= f.f0_tm_N);
  CHECK(f.total_N > 0);
}

TEST_CASE("PFA force and plane pressure are consistent (F' = -2 pi R P)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ga(100, 1000);
  for (int i = 0; i < 2; ++i) {
    const double a = ga(rng), R = 150;
    const double h = a * 1e-4;
    const auto c = [&](double gap) { return cavity(gold(), gap, 300); };
    const double fp = f_ps({R, a + h}, c(a + h)).total_N;
    const double fm = f_ps({R, a - h}, c(a - h)).total_N;
    const double derivative = (fp - fm) / (2 * h);  // N/nm
    const double p = pressure(c(a)).total_Pa;       // N/m^2
    const double expected = -2 * oracle::pi * R * 1e-6 * p * 1e-9;
    CHECK(std::abs(derivative / expected - 1) < 1e-4);
  }
}

TEST_CASE("geometry guards") {
  CHECK_THROWS_AS(SphereGeometry({2, 150}).validate(), ConfigError);  // a/R = 0.075
  CHECK_NOTHROW(SphereGeometry({200, 150}).validate());
  CHECK_THROWS_AS(SphereGeometry({-1, 150}).validate(), ConfigError);
  CHECK_THROWS_AS(f_ps({200, 150}, cavity(gold(), 160, 5)), ConfigError);
  CHECK_THROWS_AS(f0_te_ps({200, 150}, 5, -1.0), DomainError);
}
