#include "matsubara_series.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/units.hpp"
#include "reflection_kernel.hpp"

namespace casimir::detail {

namespace {

constexpr long block_size = 32;
constexpr int stop_run = 3;

// Power of y that multiplies the kernel after the azimuthal integral and the
// change of variables: y^2 for the pressure, y for the energy (force/R).
double measure(Quantity quantity, double y) { return quantity == Quantity::Pressure ? y * y : y; }

double prefactor(Quantity quantity, double gap_nm, double temperature_K) {
  const double two_a = 2.0 * gap_nm;
  const double kT = units::thermal_energy_eV(temperature_K);
  if (quantity == Quantity::Pressure) return kT / (units::pi * two_a * two_a * two_a);
  return kT / (two_a * two_a);
}

double kernel(Quantity quantity, const Reflection& a, const Reflection& b, double y) {
  return quantity == Quantity::Pressure ? pressure_kernel(a, b, y) : energy_kernel(a, b, y);
}

QuadratureResult scaled(QuadratureResult r, double factor) {
  r.value *= factor;
  r.abs_error *= factor;
  return r;
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

QuadratureResult zero_mode_te(Quantity quantity, double gap_nm, double temperature_K,
                              double omega_eff1_eV, double omega_eff2_eV, double rel_tol) {
  if (omega_eff1_eV == 0.0 || omega_eff2_eV == 0.0) return {};
  const double s1 = 2.0 * gap_nm * omega_eff1_eV / units::hbar_c_eV_nm;
  const double s2 = 2.0 * gap_nm * omega_eff2_eV / units::hbar_c_eV_nm;
  auto integrand = [&](double x) {
    return measure(quantity, x) *
           kernel(quantity, plasma_form_static(s1, x), plasma_form_static(s2, x), x);
  };
  const QuadratureResult r = integrate(integrand, 0.0, y_window, rel_tol);
  return scaled(r, zero_mode_weight * prefactor(quantity, gap_nm, temperature_K));
}

QuadratureResult zero_mode_tm(Quantity quantity, double gap_nm, double temperature_K,
                              double rel_tol) {
  auto integrand = [&](double x) {
    return measure(quantity, x) * kernel(quantity, full_reflection, full_reflection, x);
  };
  const QuadratureResult r = integrate(integrand, 0.0, y_window, rel_tol);
  return scaled(r, zero_mode_weight * prefactor(quantity, gap_nm, temperature_K));
}

MatsubaraSum nonzero_modes(Quantity quantity, const CavityConfig& config) {
  const double gap = config.gap_nm;
  const double T = config.temperature_K;
  const double factor = prefactor(quantity, gap, T);
  const MaterialModel& m1 = config.plate1.material;
  const MaterialModel& m2 = config.plate2.material;

  auto term = [&](long l) -> QuadratureResult {
    const double xi = matsubara(T, l);
    const double w = 2.0 * gap * xi / units::hbar_c_eV_nm;
    const double chi1 = susceptibility_imaginary(m1, xi, T);
    const double chi2 = susceptibility_imaginary(m2, xi, T);
    if (chi1 == 0.0 || chi2 == 0.0) return {};
    auto integrand = [&](double y) {
      const double te = kernel(quantity, te_dynamic(chi1, w, y), te_dynamic(chi2, w, y), y);
      const double tm = kernel(quantity, tm_dynamic(chi1, w, y), tm_dynamic(chi2, w, y), y);
      return measure(quantity, y) * (te + tm);
    };
    return scaled(integrate(integrand, w, w + y_window, config.quad_rel_tol), factor);
  };

  const unsigned workers = resolve_workers(config.workers);
  std::vector<QuadratureResult> block(block_size);

  CompensatedSum sum;
  double max_error = 0.0;
  int quiet_run = 0;
  double last = 0.0;
  for (long start = 1; start <= config.l_max_cap; start += block_size) {
    const long count = std::min(block_size, config.l_max_cap - start + 1);
    if (workers <= 1) {
      for (long i = 0; i < count; ++i) block[i] = term(start + i);
    } else {
      // Strided static split; each slot is written by exactly one task.
      std::vector<std::future<void>> tasks;
      for (unsigned t = 0; t < workers; ++t) {
        tasks.push_back(std::async(std::launch::async, [&, t] {
          for (long i = t; i < count; i += workers) block[i] = term(start + i);
        }));
      }
      for (auto& task : tasks) task.get();
    }
    for (long i = 0; i < count; ++i) {
      last = block[i].value;
      sum.add(last);
      max_error = std::max(max_error, block[i].abs_error);
      if (std::abs(last) <= config.sum_rel_tol * std::abs(sum.value())) {
        if (++quiet_run == stop_run) return {sum.value(), start + i, max_error};
      } else {
        quiet_run = 0;
      }
    }
  }
  throw ConvergenceError("Matsubara sum not converged within l_max_cap terms", sum.value(), last,
                         config.l_max_cap);
}

} // namespace casimir::detail
