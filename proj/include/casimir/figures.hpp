#pragma once

// Parameter sweeps of the temperature differentials, including the four
// standard figure reproductions:
//   1: Delta P vs T1 at a = 150 nm            (mPa)
//   2: Delta P vs a at T1 = 5 K               (mPa)
//   3: Delta F/R vs T1 at a = 150 nm          (1e-10 N/m)
//   4: Delta F/R vs a at T1 = 5 K             (1e-10 N/m)
// Each row carries the Drude Nb-Nb, Drude Nb-Au and plasma Nb-Nb values.

#include <optional>
#include <string>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/deltas.hpp"

namespace casimir {

enum class SweptVariable { Gap, T1 };

struct SweepSpec {
  SweptVariable swept = SweptVariable::T1;
  std::vector<double> grid;  ///< nm for Gap, K for T1
  DeltaRequest fixed;        ///< setup and prescription are overridden per column
  unsigned threads = 0;

  void validate() const;
};

struct RunRow {
  double swept;
  double drude_nbnb;
  double drude_nbau;
  double plasma;
};

struct RunReport {
  std::vector<RunRow> rows;  ///< in grid order; values in Pa or N
  Provenance provenance;
  double seconds = 0.0;
};

/// Evaluates the sweep, rows in parallel, returned in grid order.
RunReport run_sweep(const SweepSpec& spec);

inline constexpr int figure_points = 81;

/// Evenly spaced grid of `points` values on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, int points);

/// Sweep behind figure `id` (1-4). T2 defaults to T_c itself: at T_c the
/// superconducting TE static term is gone, which is what the figures' Nb-Au
/// values and the Nb-Nb/Nb-Au ordering correspond to.
SweepSpec figure_sweep(int id, unsigned threads = 0, std::optional<double> t2_K = std::nullopt);

/// Converts a report to the figure's CSV layout and units.
CsvTable figure_table(int id, const RunReport& report);

} // namespace casimir
