#include "casimir/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "casimir/config.hpp"
#include "casimir/deltas.hpp"
#include "casimir/errors.hpp"
#include "casimir/figures.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/pfa.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

using units::hbar_c_eV_nm;
using units::pi;

constexpr double nb_t_c = 9.2;
constexpr double t2_default = default_t2_fraction * nb_t_c;

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(4) << v;
  return s.str();
}

double rel_err(double value, double reference) { return std::abs(value - reference) / std::abs(reference); }

CriterionResult within(std::string id, std::string title, double measured, double expected,
                       double rel_tol) {
  return {std::move(id), std::move(title), rel_err(measured, expected) <= rel_tol, num(measured),
          num(expected), "rel " + num(rel_tol)};
}

DeltaRequest closed_request(DeltaGeometry geometry, double gap_nm, double t1, double t2, Setup setup,
                            ZeroModePrescription prescription) {
  DeltaRequest r;
  r.geometry = geometry;
  r.gap_nm = gap_nm;
  r.radius_um = 200.0;
  r.t1_K = t1;
  r.t2_K = t2;
  r.setup = setup;
  r.prescription = prescription;
  r.method = DeltaMethod::ClosedForm;
  return r;
}

CavityConfig symmetric_cavity(const MaterialModel& m, double gap_nm, double T,
                              ZeroModePrescription prescription) {
  CavityConfig c;
  c.gap_nm = gap_nm;
  c.temperature_K = T;
  c.plate1 = {m};
  c.plate2 = {m};
  c.prescription = prescription;
  return c;
}

CriterionResult plasma_te_reflection() {
  const PlateState au{gold(), 300.0};
  const double r = te_zero_reflection(au, ZeroModePrescription::Plasma, 1.0 / (2.0 * 200.0));
  return {"plasma-te-reflection", "static TE reflection, plasma prescription, a = 200 nm",
          std::abs(r - 0.90) <= 0.005, num(r), "0.90", "abs 0.005"};
}

CriterionResult matsubara_scale() {
  const double xi1 = matsubara(300.0, 1);
  return {"matsubara-scale", "first Matsubara energy at 300 K", xi1 >= 0.155 && xi1 <= 0.165,
          num(xi1) + " eV", "[0.155, 0.165] eV", "range"};
}

CriterionResult zeta_tm() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> log_gap(std::log(100.0), std::log(5000.0));
  std::uniform_real_distribution<double> temp(1.0, 300.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double a = std::exp(log_gap(rng));
    const double T = temp(rng);
    worst = std::max(worst, rel_err(p0_tm_numeric(a, T), p0_tm(a, T)));
  }
  return {"zeta-tm", "l = 0 TM quadrature vs k_B T zeta(3)/(8 pi a^3), 10 random (a, T)",
          worst <= 1e-8, "max rel " + num(worst), "0", "rel 1e-08"};
}

CriterionResult te_expansion() {
  const double a = 1000.0, T = 300.0;
  bool ok = true;
  std::string measured, bound;
  for (double x : {0.01, 0.05, 0.1, 0.15}) {
    const double delta = x * a;
    const double numeric = p0_te_numeric(a, T, hbar_c_eV_nm / delta);
    const double expansion = p0_te_expansion(a, T, delta);
    const double err = rel_err(numeric, expansion);
    const double limit = 5.0 * x * x * x;
    ok = ok && err <= limit;
    measured += (measured.empty() ? "" : " ") + num(err);
    bound += (bound.empty() ? "" : " ") + num(limit);
  }
  return {"te-expansion", "TE static term: quadrature vs large-Wp expansion, d/a = .01 .05 .1 .15",
          ok, "rel " + measured, "expansion value", "rel 5(d/a)^3 = " + bound};
}

CriterionResult ideal_mirror_limit() {
  const double a = 500.0, T = 1.0, R_um = 200.0;
  const CavityConfig c = symmetric_cavity(ideal_mirror(), a, T, ZeroModePrescription::Plasma);
  const double p = pressure(c).total_Pa;
  const double p_ideal = pi * pi * hbar_c_eV_nm / (240.0 * a * a * a * a) * units::eV_per_nm3_to_Pa;
  const double f = f_ps({R_um, a}, c).total_N;
  const double R_nm = R_um * units::nm_per_um;
  const double f_ideal = pi * pi * pi * hbar_c_eV_nm * R_nm / (360.0 * a * a * a) * units::eV_per_nm_to_N;
  const double ep = rel_err(p, p_ideal), ef = rel_err(f, f_ideal);
  return {"ideal-mirror", "Wp = 1e4 eV, T = 1 K, a = 500 nm: pressure and PFA force",
          ep <= 0.005 && ef <= 0.005, "P " + num(p) + " Pa, F " + num(f) + " N",
          "P " + num(p_ideal) + " Pa, F " + num(f_ideal) + " N", "rel 0.005 each"};
}

CriterionResult plasma_pp_prediction() {
  const auto r = delta(closed_request(DeltaGeometry::ParallelPlates, 100.0, 5.0, 9.2, Setup::NbNb,
                                      ZeroModePrescription::Plasma));
  return within("plasma-pp-prediction", "plasma Delta P, a = 100 nm, 5 K -> 9.2 K", r.value, 1.4e-9,
                0.2);
}

CriterionResult plasma_ps_prediction() {
  const auto r = delta(closed_request(DeltaGeometry::SpherePlate, 150.0, 5.0, t2_default,
                                      Setup::NbNb, ZeroModePrescription::Plasma));
  return within("plasma-ps-prediction", "plasma Delta F, R = 200 um, a = 150 nm, 5 K -> 0.99 T_c",
                r.value, 5.3e-19, 0.2);
}

CriterionResult drude_nbnb_ps_prediction() {
  const auto r = delta(closed_request(DeltaGeometry::SpherePlate, 150.0, 5.0, t2_default,
                                      Setup::NbNb, ZeroModePrescription::Drude));
  return within("drude-nbnb-ps-prediction",
                "Drude Nb-Nb Delta F, R = 200 um, a = 150 nm, 5 K -> 0.99 T_c", r.value, -0.8e-13,
                0.25);
}

CriterionResult large_separation_ratio() {
  const double a = 50'000.0, T = 300.0;
  const double p_dr = pressure(symmetric_cavity(gold(), a, T, ZeroModePrescription::Drude)).total_Pa;
  const double p_pl = pressure(symmetric_cavity(gold(), a, T, ZeroModePrescription::Plasma)).total_Pa;
  return within("large-separation-ratio", "P_plasma / P_Drude, Au-Au, a = 50 um, T = 300 K",
                p_pl / p_dr, 2.0, 0.05);
}

CriterionResult drude_closed_vs_numeric() {
  bool ok = true;
  std::string measured;
  for (double a : {150.0, 300.0, 500.0}) {
    DeltaRequest r = closed_request(DeltaGeometry::ParallelPlates, a, 5.0, t2_default, Setup::NbAu,
                                    ZeroModePrescription::Drude);
    const double closed = delta(r).value;
    r.method = DeltaMethod::NumericDifference;
    const double numeric = delta(r).value;
    const double ratio = numeric / closed;
    ok = ok && std::abs(ratio - 1.0) <= 0.05;
    measured += (measured.empty() ? "" : " ") + num(a) + "nm:" + num(ratio);
  }
  return {"drude-closed-vs-numeric",
          "Drude Nb-Au Delta P, numeric difference / closed form, a = 150 300 500 nm", ok,
          "ratio " + measured, "1", "rel 0.05"};
}

CriterionResult prescription_gap() {
  double worst = std::numeric_limits<double>::infinity();
  for (auto geometry : {DeltaGeometry::ParallelPlates, DeltaGeometry::SpherePlate}) {
    const double pl = delta(closed_request(geometry, 150.0, 5.0, t2_default, Setup::NbNb,
                                           ZeroModePrescription::Plasma))
                          .value;
    for (auto setup : {Setup::NbNb, Setup::NbAu}) {
      const double dr =
          delta(closed_request(geometry, 150.0, 5.0, t2_default, setup, ZeroModePrescription::Drude))
              .value;
      worst = std::min(worst, std::abs(dr) / std::abs(pl));
    }
  }
  return {"prescription-gap", "|Delta_Drude| / |Delta_plasma| at a = 150 nm, T1 = 5 K",
          worst >= 1e5, "min " + num(worst), ">= 1e5", "bound"};
}

CriterionResult figure_properties() {
  std::string failures;
  for (int id = 1; id <= 4; ++id) {
    const CsvTable table = figure_table(id, run_sweep(figure_sweep(id)));
    double prev_nbnb = std::numeric_limits<double>::infinity();
    double prev_nbau = std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
      const double nbnb = std::stod(row[1]);
      const double nbau = std::stod(row[2]);
      std::string where = "fig" + std::to_string(id) + "@" + row[0];
      if (!(nbnb < 0.0 && nbau < 0.0)) failures += " sign:" + where;
      if (!(std::abs(nbnb) >= std::abs(nbau))) failures += " order:" + where;
      if (id == 2 || id == 4) {
        if (!(std::abs(nbnb) < prev_nbnb && std::abs(nbau) < prev_nbau))
          failures += " monotone:" + where;
        prev_nbnb = std::abs(nbnb);
        prev_nbau = std::abs(nbau);
      }
    }
  }
  return {"figure-properties", "figures 1-4: Drude deltas negative, |NbNb| >= |NbAu|, decay in a",
          failures.empty(), failures.empty() ? "all rows hold" : failures.substr(0, 200),
          "all rows hold", "exact"};
}

CriterionResult figure1_nbau_value() {
  SweepSpec spec = figure_sweep(1);
  spec.grid = {5.0};
  const CsvTable table = figure_table(1, run_sweep(spec));
  return within("fig1-nbau-value", "figure 1 Nb-Au row at T1 = 5 K (mPa)", std::stod(table.rows[0][2]),
                -0.52, 0.05);
}

CriterionResult pfa_derivative() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> gap(150.0, 1000.0);
  std::uniform_real_distribution<double> temp(1.0, 300.0);
  const MaterialModel materials[] = {gold(), niobium(), ideal_mirror()};
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double a = gap(rng);
    const double T = temp(rng);
    const MaterialModel& m = materials[i % 3];
    const auto prescription = i % 2 ? ZeroModePrescription::Plasma : ZeroModePrescription::Drude;
    const double R_um = 200.0;
    const double h = a * 1e-4;
    auto force = [&](double gap_nm) {
      return f_ps({R_um, gap_nm}, symmetric_cavity(m, gap_nm, T, prescription)).total_N;
    };
    const double dF_da = (force(a + h) - force(a - h)) / (2.0 * h) * 1e9;  // N/m
    const double two_pi_R_P = 2.0 * pi * R_um * 1e-6 * pressure(symmetric_cavity(m, a, T, prescription)).total_Pa;
    worst = std::max(worst, std::abs(dF_da + two_pi_R_P) / two_pi_R_P);
  }
  return {"pfa-derivative", "dF/da + 2 pi R P(a) = 0, 5 random configs", worst < 1e-4,
          "max rel " + num(worst), "0", "rel 1e-4"};
}

bool same(const PressureBreakdown& x, const PressureBreakdown& y) {
  return x.p0_te_Pa == y.p0_te_Pa && x.p0_tm_Pa == y.p0_tm_Pa && x.p1_Pa == y.p1_Pa &&
         x.total_Pa == y.total_Pa && x.l_used == y.l_used;
}

bool same(const ForceBreakdown& x, const ForceBreakdown& y) {
  return x.f0_te_N == y.f0_te_N && x.f0_tm_N == y.f0_tm_N && x.f1_N == y.f1_N &&
         x.total_N == y.total_N && x.l_used == y.l_used;
}

CriterionResult plasma_sc_neutrality() {
  bool ok = true;
  for (const MaterialModel& other : {niobium(), gold()}) {
    CavityConfig s = symmetric_cavity(niobium(), 300.0, 5.0, ZeroModePrescription::Plasma);
    s.plate2 = {other};
    CavityConfig n = s;
    n.plate1.force_normal = true;
    n.plate2.force_normal = true;
    ok = ok && same(pressure(s), pressure(n));
    ok = ok && same(f_ps({200.0, 300.0}, s), f_ps({200.0, 300.0}, n));
  }
  return {"plasma-sc-neutrality",
          "plasma prescription: superconducting vs forced-normal plates, P and F bitwise",
          ok, ok ? "identical" : "differ", "identical", "bitwise"};
}

struct Criterion {
  const char* id;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& registry() {
  static const std::vector<Criterion> all = {
      {"plasma-te-reflection", plasma_te_reflection},
      {"matsubara-scale", matsubara_scale},
      {"zeta-tm", zeta_tm},
      {"te-expansion", te_expansion},
      {"ideal-mirror", ideal_mirror_limit},
      {"plasma-pp-prediction", plasma_pp_prediction},
      {"plasma-ps-prediction", plasma_ps_prediction},
      {"drude-nbnb-ps-prediction", drude_nbnb_ps_prediction},
      {"large-separation-ratio", large_separation_ratio},
      {"drude-closed-vs-numeric", drude_closed_vs_numeric},
      {"prescription-gap", prescription_gap},
      {"figure-properties", figure_properties},
      {"pfa-derivative", pfa_derivative},
      {"plasma-sc-neutrality", plasma_sc_neutrality},
      {"fig1-nbau-value", figure1_nbau_value},
  };
  return all;
}

} // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.emplace_back(c.id);
  return ids;
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only) {
  for (const auto& id : only) {
    const auto ids = criterion_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw ConfigError("unknown criterion '" + id + "'");
  }
  std::vector<CriterionResult> results;
  for (const auto& c : registry()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    try {
      results.push_back(c.run());
    } catch (const std::exception& e) {
      results.push_back({c.id, "raised an exception", false, e.what(), "-", "-"});
    }
  }
  return results;
}

bool print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.id << r.title
        << "\n       measured: " << r.measured << " | expected: " << r.expected
        << " | tolerance: " << r.tolerance << '\n';
    passed += r.passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size();
}

} // namespace casimir
