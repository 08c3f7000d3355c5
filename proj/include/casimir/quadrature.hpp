#pragma once

// Numerical plumbing shared by the Lifshitz and PFA engines: globally
// adaptive Gauss-Kronrod (7/15) integration on a finite window, and
// Neumaier-compensated accumulation for the Matsubara series.

#include <cmath>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimir {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

namespace detail {

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double lo, double hi) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using gauss = boost::math::quadrature::gauss<double, 7>;
  static const auto& x = kronrod::abscissa();
  static const auto& wk = kronrod::weights();
  static const auto& wg = gauss::weights();

  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double k15 = wk[0] * fc;
  double g7 = wg[0] * fc;
  // Kronrod abscissae interleave: odd indices are the added nodes, even
  // indices coincide with the Gauss points.
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    k15 += wk[i] * pair;
    if (i % 2 == 0) g7 += wg[i / 2] * pair;
  }
  return {lo, hi, k15 * half, std::abs((k15 - g7) * half)};
}

} // namespace detail

/// Integrates f over [lo, hi], bisecting the panel with the largest error
/// estimate until the summed estimate drops below rel_tol * |integral| (or
/// below abs_floor). Deterministic: panel order depends only on f.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, double rel_tol, double abs_floor = 0.0) {
  constexpr int max_panels = 2000;
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_panel(f, lo, hi));
  double value = panels.top().value;
  double error = panels.top().error;
  int count = 1;
  while (error > std::max(rel_tol * std::abs(value), abs_floor) && count < max_panels) {
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const detail::Panel left = detail::gauss_kronrod_panel(f, worst.lo, mid);
    const detail::Panel right = detail::gauss_kronrod_panel(f, mid, worst.hi);
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum from the panels to shed the drift of the running updates.
  double sum = 0.0, err = 0.0;
  std::vector<detail::Panel> rest;
  rest.reserve(panels.size());
  while (!panels.empty()) {
    rest.push_back(panels.top());
    panels.pop();
  }
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    sum += it->value;
    err += it->error;
  }
  return {sum, err, count};
}

/// Neumaier's variant of Kahan summation. Order-dependent by construction,
/// so callers feed terms in a fixed order.
class CompensatedSum {
public:
  void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term))
      compensation_ += (sum_ - t) + term;
    else
      compensation_ += (term - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

} // namespace casimir
