#pragma once

// Entanglement sudden death detection under threshold semantics.
//
// A death interval is a maximal stretch of time over which the negativity is
// below epsilon. Reports always carry the exact minimum alongside the
// thresholded classification, because the closed-form negativities of these
// models touch zero only in limits.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "esdlab/params.hpp"

namespace esdlab::esd {

enum class Regime { ESD, BoundedOscillation, Eraser, Preserved };

std::string_view to_string(Regime r);

struct Interval {
  double start = 0.0;
  double end = 0.0;
};

struct Thresholds {
  double epsilon = 1e-3;
  /// min N at or above this counts as Preserved.
  double preserved_min = 0.9;
  /// Slack allowed when testing a curve for monotone decay.
  double monotone_slack = 1e-12;
};

struct EsdReport {
  double min_negativity = 0.0;
  double argmin_t = 0.0;
  std::vector<Interval> death_intervals;  // disjoint, sorted, inside the window
  Regime classification = Regime::BoundedOscillation;
  double epsilon = 0.0;
};

/// Negativity sampled on a uniform time grid. When `evaluate` is set,
/// crossings and the minimum are refined on it instead of interpolated.
struct SampledCurve {
  std::vector<double> times;
  std::vector<double> values;
  std::function<double(double)> evaluate;
};

/// Classification order: Eraser (monotone decay ending below epsilon), then
/// ESD (any death interval), then Preserved, else BoundedOscillation.
/// Throws ContractError on an empty curve or non-positive epsilon.
EsdReport detect_esd(const SampledCurve& curve, const Thresholds& thresholds = {});

/// Closed-form N_AB(t) of either model.
double negativity_ab(const ModelParams& params, const InitialAtomState& init, double t);

/// Period of N_AB(t): 2 pi/|delta| for Model 1, the common period for Model 2.
/// Empty when the dynamics never revive (resonance, incommensurate detunings).
std::optional<double> model_period(const ModelParams& params);

/// Scan window: `periods` periods when a period exists, else `horizon`.
double scan_window(const ModelParams& params, double periods, double horizon);

/// Samples N_AB on [0, window] with `samples` points and attaches the
/// closed form as the refinement function.
SampledCurve sample_negativity(const ModelParams& params, const InitialAtomState& init,
                               double window, std::size_t samples);

}  // namespace esdlab::esd
