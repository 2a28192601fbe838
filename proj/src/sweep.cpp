#include "esdlab/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "esdlab/errors.hpp"
#include "esdlab/model1.hpp"

namespace esdlab::sweep {

namespace {

void check_axis(const AxisRange& axis, const char* name) {
  if (axis.count < 1 || !std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.hi < axis.lo)
    throw ContractError(std::string("invalid ") + name + " range");
}

SweepGrid empty_grid(const AxisRange& theta, const AxisRange& time) {
  check_axis(theta, "theta");
  check_axis(time, "time");
  if (time.lo < 0.0) throw ContractError("time range must start at t >= 0");
  SweepGrid grid;
  grid.theta_axis = theta.points();
  grid.time_axis = time.points();
  grid.values.resize(grid.rows() * grid.cols());
  return grid;
}

double cell_value(const ModelParams& params, Family family, const SweepGrid& grid,
                  std::size_t idx) {
  const std::size_t r = idx / grid.cols(), c = idx % grid.cols();
  const InitialAtomState init{family, grid.theta_axis[r], 0.0};
  return esd::negativity_ab(params, init, grid.time_axis[c]);
}

PhaseMap empty_map(const PhaseMapSpec& spec) {
  if (spec.model != 1 && spec.model != 2) throw ContractError("model must be 1 or 2");
  check_axis(spec.ratio_a, "ratio");
  if (spec.ratio_a.lo <= 0.0) throw ContractError("ratios must be positive");
  PhaseMap map;
  map.ratio_a = spec.ratio_a.points();
  if (spec.model == 2) {
    check_axis(spec.ratio_b, "ratio_b");
    if (spec.ratio_b.lo <= 0.0) throw ContractError("ratios must be positive");
    map.ratio_b = spec.ratio_b.points();
  }
  map.cells.resize(map.rows() * map.cols());
  map.min_negativity.resize(map.cells.size());
  return map;
}

void fill_cell(const PhaseMapSpec& spec, PhaseMap& map, std::size_t idx) {
  const std::size_t r = idx / map.cols(), c = idx % map.cols();
  const double rb = map.ratio_b.empty() ? 0.0 : map.ratio_b[c];
  const esd::EsdReport report = phase_map_cell(spec, map.ratio_a[r], rb);
  map.cells[idx] = report.classification;
  map.min_negativity[idx] = report.min_negativity;
}

void fill_boundary(PhaseMap& map) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (map.ratio_b.empty()) {
    double first = nan;
    for (std::size_t r = 0; r < map.rows(); ++r)
      if (map.at(r, 0) == esd::Regime::ESD) {
        first = map.ratio_a[r];
        break;
      }
    map.boundary = {first};
    return;
  }
  map.boundary.assign(map.rows(), nan);
  for (std::size_t r = 0; r < map.rows(); ++r)
    for (std::size_t c = 0; c < map.cols(); ++c)
      if (map.at(r, c) == esd::Regime::ESD) {
        map.boundary[r] = map.ratio_b[c];
        break;
      }
}

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

std::vector<double> AxisRange::points() const {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = count == 1 ? lo
                        : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

SweepGrid sweep_theta_time_serial(const ModelParams& params, Family family,
                                  const AxisRange& theta, const AxisRange& time) {
  SweepGrid grid = empty_grid(theta, time);
  for (std::size_t idx = 0; idx < grid.values.size(); ++idx)
    grid.values[idx] = cell_value(params, family, grid, idx);
  return grid;
}

SweepGrid sweep_theta_time(const ModelParams& params, Family family, const AxisRange& theta,
                           const AxisRange& time, int jobs) {
  SweepGrid grid = empty_grid(theta, time);
  const auto n = static_cast<std::ptrdiff_t>(grid.values.size());
#pragma omp parallel for schedule(static) num_threads(resolve_jobs(jobs))
  for (std::ptrdiff_t idx = 0; idx < n; ++idx)
    grid.values[idx] = cell_value(params, family, grid, static_cast<std::size_t>(idx));
  return grid;
}

esd::EsdReport phase_map_cell(const PhaseMapSpec& spec, double ratio_a, double ratio_b) {
  const InitialAtomState init{spec.family, spec.theta, 0.0};
  ModelParams params;
  double shortest = 0.0, longest = 0.0;
  if (spec.model == 1) {
    const DriveParams p{1.0, 1.0 / ratio_a};
    params = p;
    shortest = longest = model1::period(p);
  } else {
    const DoubleDriveParams p{{1.0, 1.0 / ratio_a}, {1.0, 1.0 / ratio_b}};
    params = p;
    const double ta = model1::period(p.channel_a), tb = model1::period(p.channel_b);
    shortest = std::min(ta, tb);
    longest = std::max(ta, tb);
  }
  const double window = esd::scan_window(params, 1.0, spec.horizon_periods * longest);
  const double per_period = static_cast<double>(std::max<std::size_t>(spec.samples_per_period, 100));
  const auto samples = static_cast<std::size_t>(
      std::clamp(std::ceil(per_period * window / shortest) + 1.0, 2.0, 400000.0));
  return esd::detect_esd(esd::sample_negativity(params, init, window, samples), spec.thresholds);
}

PhaseMap phase_map_serial(const PhaseMapSpec& spec) {
  PhaseMap map = empty_map(spec);
  for (std::size_t idx = 0; idx < map.cells.size(); ++idx) fill_cell(spec, map, idx);
  fill_boundary(map);
  return map;
}

PhaseMap phase_map(const PhaseMapSpec& spec, int jobs) {
  PhaseMap map = empty_map(spec);
  const auto n = static_cast<std::ptrdiff_t>(map.cells.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (std::ptrdiff_t idx = 0; idx < n; ++idx) fill_cell(spec, map, static_cast<std::size_t>(idx));
  fill_boundary(map);
  return map;
}

}  // namespace esdlab::sweep
