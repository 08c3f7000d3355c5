#include "doctest.h"

#include <cmath>
#include <vector>

#include "casimir/quadrature.hpp"

using casimir::CompensatedSum;
using casimir::integrate;

TEST_CASE("Gauss-Kronrod is exact for low-degree polynomials on one panel") {
  const auto r = integrate([](double x) { return 3 * x * x * x * x - x + 2; }, -1.0, 2.0, 1e-14);
  // 3/5 (32 + 1) - (4 - 1)/2 + 2*3
  CHECK(r.value == doctest::Approx(19.8 - 1.5 + 6.0).epsilon(1e-15));
  CHECK(r.intervals == 1);
}

TEST_CASE("adaptive refinement resolves a sharp peak") {
  const double eps = 1e-3;
  auto f = [eps](double x) { return eps / (x * x + eps * eps); };
  const auto r = integrate(f, -1.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / eps)).epsilon(1e-11));
  CHECK(r.intervals > 1);
  CHECK(r.abs_error <= 1e-12 * std::abs(r.value));
}

TEST_CASE("exponential tails to machine precision") {
  const auto r = integrate([](double y) { return y * y * std::exp(-y); }, 0.0, 60.0, 1e-13);
  const double exact = 2.0 - std::exp(-60.0) * (3600.0 + 120.0 + 2.0);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("absolute floor stops refinement of a vanishing integrand") {
  const auto r = integrate([](double x) { return std::sin(x); }, -3.0, 3.0, 1e-12, 1e-14);
  CHECK(std::abs(r.value) < 1e-14);
}

TEST_CASE("compensated sum recovers what naive summation drops") {
  CompensatedSum s;
  double naive = 0.0;
  const std::vector<double> terms{1.0, 1e100, 1.0, -1e100};
  for (double t : terms) {
    s.add(t);
    naive += t;
  }
  CHECK(s.value() == 2.0);
  CHECK(naive != 2.0);
}
