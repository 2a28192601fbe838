#pragma once

// Grid sweeps over the closed forms. Every kernel comes in two flavours: an
// OpenMP version used by the CLI and a serial reference that the tests hold
// the parallel one to (bit-identical output is required).

#include <cstddef>
#include <vector>

#include "esdlab/esd.hpp"
#include "esdlab/params.hpp"

namespace esdlab::sweep {

/// `count` evenly spaced points on [lo, hi], endpoints included.
struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  std::vector<double> points() const;
};

/// N_AB over (theta, t); row = theta, column = t, row-major.
struct SweepGrid {
  std::vector<double> theta_axis;
  std::vector<double> time_axis;
  std::vector<double> values;

  std::size_t rows() const { return theta_axis.size(); }
  std::size_t cols() const { return time_axis.size(); }
  double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
};

/// jobs <= 0 uses the OpenMP default thread count.
SweepGrid sweep_theta_time(const ModelParams& params, Family family, const AxisRange& theta,
                           const AxisRange& time, int jobs = 0);
SweepGrid sweep_theta_time_serial(const ModelParams& params, Family family,
                                  const AxisRange& theta, const AxisRange& time);

struct PhaseMapSpec {
  int model = 1;
  /// g/delta for Model 1, g_A/delta_A for Model 2 (couplings fixed at 1).
  AxisRange ratio_a{0.25, 3.0, 45};
  /// g_B/delta_B, Model 2 only.
  AxisRange ratio_b{0.25, 3.0, 45};
  double theta = 0.7853981633974483;  // pi / 4
  Family family = Family::Psi;
  esd::Thresholds thresholds{};
  /// Samples per shortest channel period.
  std::size_t samples_per_period = 400;
  /// Window length, in longest channel periods, when no common period exists.
  double horizon_periods = 16.0;
};

/// Classifications over one common period per cell. rows = ratio_a, cols =
/// ratio_b (1 for Model 1).
struct PhaseMap {
  std::vector<double> ratio_a;
  std::vector<double> ratio_b;
  std::vector<esd::Regime> cells;
  std::vector<double> min_negativity;
  /// Model 1: one entry, the smallest ratio classified ESD. Model 2: per
  /// ratio_a row, the smallest ratio_b classified ESD. NaN where none.
  std::vector<double> boundary;

  std::size_t rows() const { return ratio_a.size(); }
  std::size_t cols() const { return ratio_b.empty() ? 1 : ratio_b.size(); }
  esd::Regime at(std::size_t r, std::size_t c) const { return cells[r * cols() + c]; }
};

PhaseMap phase_map(const PhaseMapSpec& spec, int jobs = 0);
PhaseMap phase_map_serial(const PhaseMapSpec& spec);

/// Report for a single phase-map cell, shared by both kernels.
esd::EsdReport phase_map_cell(const PhaseMapSpec& spec, double ratio_a, double ratio_b);

}  // namespace esdlab::sweep
