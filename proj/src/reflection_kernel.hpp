#pragma once

// Reflection coefficients and Lifshitz integrands in the dimensionless
// variables used by the quadratures:
//   y = 2 a q       (q = sqrt(k^2 + xi^2/(hbar c)^2))
//   w = 2 a xi / (hbar c)   (lower limit of y for Matsubara mode xi)
//   s = 2 a omega_eff / (hbar c)   (static plasma-form coefficient)
// Every coefficient carries its complement 1 - r, evaluated without
// subtraction, so that 1 - r1 r2 exp(-y) stays accurate as r -> 1, y -> 0.

#include <cmath>
#include <limits>

namespace casimir::detail {

struct Reflection {
  double r = 0.0;
  double one_minus_r = 1.0;
};

inline constexpr Reflection no_reflection{0.0, 1.0};
inline constexpr Reflection full_reflection{1.0, 0.0};

/// (sqrt(s^2 + x^2) - x)/(sqrt(s^2 + x^2) + x) with x = 2 a k.
inline Reflection plasma_form_static(double s, double x) {
  if (s == 0.0) return no_reflection;
  if (std::isinf(s)) return full_reflection;
  const double root = std::hypot(s, x);
  const double sum = root + x;
  return {(s / sum) * (s / sum), 2.0 * x / sum};
}

/// TE coefficient at xi > 0; chi = eps - 1.
inline Reflection te_dynamic(double chi, double w, double y) {
  const double km = std::sqrt(y * y + chi * w * w);
  const double sum = km + y;
  return {chi * w * w / (sum * sum), 2.0 * y / sum};
}

/// TM coefficient at xi > 0; chi = eps - 1.
inline Reflection tm_dynamic(double chi, double w, double y) {
  const double eps = 1.0 + chi;
  const double km = std::sqrt(y * y + chi * w * w);
  const double sum = eps * y + km;
  return {chi * ((eps + 1.0) * y * y - w * w) / (sum * sum), 2.0 * km / sum};
}

/// 1 - r1 r2 exp(-y), all terms non-negative.
inline double one_minus_round_trip(const Reflection& a, const Reflection& b, double y) {
  const double one_minus_product = a.one_minus_r + a.r * b.one_minus_r;
  return -std::expm1(-y) + std::exp(-y) * one_minus_product;
}

/// Pressure integrand r1 r2 e^{-y} / (1 - r1 r2 e^{-y}).
inline double pressure_kernel(const Reflection& a, const Reflection& b, double y) {
  const double numerator = a.r * b.r * std::exp(-y);
  if (numerator == 0.0) return 0.0;
  return numerator / one_minus_round_trip(a, b, y);
}

/// Energy integrand -log(1 - r1 r2 e^{-y}).
inline double energy_kernel(const Reflection& a, const Reflection& b, double y) {
  const double round_trip = a.r * b.r * std::exp(-y);
  if (round_trip == 0.0) return 0.0;
  if (round_trip < 0.5) return -std::log1p(-round_trip);
  return -std::log(one_minus_round_trip(a, b, y));
}

} // namespace casimir::detail
