#include "esdlab/esd.hpp"

#include <algorithm>
#include <cmath>

#include "esdlab/errors.hpp"
#include "esdlab/model1.hpp"
#include "esdlab/model2.hpp"

namespace esdlab::esd {

namespace {

// Root of f(t) = epsilon between `above` (f >= eps) and `below` (f < eps).
double bisect_crossing(const std::function<double(double)>& f, double epsilon, double above,
                       double below, double tol) {
  for (int it = 0; it < 200 && std::abs(below - above) > tol; ++it) {
    const double mid = 0.5 * (above + below);
    (f(mid) < epsilon ? below : above) = mid;
  }
  return 0.5 * (above + below);
}

double interpolate_crossing(double t0, double v0, double t1, double v1, double epsilon) {
  if (v1 == v0) return 0.5 * (t0 + t1);
  return t0 + (epsilon - v0) * (t1 - t0) / (v1 - v0);
}

struct Minimum {
  double t;
  double value;
};

Minimum golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && hi - lo > tol; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double t = 0.5 * (lo + hi);
  return {t, f(t)};
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::ESD: return "ESD";
    case Regime::BoundedOscillation: return "BoundedOscillation";
    case Regime::Eraser: return "Eraser";
    case Regime::Preserved: return "Preserved";
  }
  return "?";
}

EsdReport detect_esd(const SampledCurve& curve, const Thresholds& th) {
  const auto& ts = curve.times;
  const auto& vs = curve.values;
  if (ts.empty() || vs.size() != ts.size())
    throw ContractError("detect_esd: curve must be non-empty with one value per time");
  if (!(th.epsilon > 0.0)) throw ContractError("detect_esd: epsilon must be positive");

  const std::size_t n = ts.size();
  const double window = ts.back() - ts.front();
  const double tol = 1e-9 * std::max(window, 1e-300);
  const bool refine = static_cast<bool>(curve.evaluate);

  EsdReport report;
  report.epsilon = th.epsilon;

  const auto imin = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  report.min_negativity = vs[imin];
  report.argmin_t = ts[imin];
  if (refine && n >= 2) {
    const double lo = ts[imin == 0 ? 0 : imin - 1];
    const double hi = ts[std::min(imin + 1, n - 1)];
    const Minimum m = golden_section(curve.evaluate, lo, hi, 1e-12 * std::max(window, 1e-300));
    if (m.value < report.min_negativity) {
      report.min_negativity = m.value;
      report.argmin_t = m.t;
    }
  }

  auto crossing = [&](std::size_t above, std::size_t below) {
    if (refine) return bisect_crossing(curve.evaluate, th.epsilon, ts[above], ts[below], tol);
    return interpolate_crossing(ts[above], vs[above], ts[below], vs[below], th.epsilon);
  };

  for (std::size_t i = 0; i < n;) {
    if (vs[i] >= th.epsilon) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && vs[j + 1] < th.epsilon) ++j;
    const double start = i == 0 ? ts.front() : crossing(i - 1, i);
    const double end = j + 1 == n ? ts.back() : crossing(j + 1, j);
    report.death_intervals.push_back({start, end});
    i = j + 1;
  }

  // A dip narrower than the grid spacing: no sample is below threshold but the
  // refined minimum is.
  if (refine && report.death_intervals.empty() && report.min_negativity < th.epsilon) {
    const double tm = report.argmin_t;
    const double lo = ts[imin == 0 ? 0 : imin - 1];
    const double hi = ts[std::min(imin + 1, n - 1)];
    const double start = lo < tm && vs[imin == 0 ? 0 : imin - 1] >= th.epsilon
                             ? bisect_crossing(curve.evaluate, th.epsilon, lo, tm, tol)
                             : lo;
    const double end = hi > tm && vs[std::min(imin + 1, n - 1)] >= th.epsilon
                           ? bisect_crossing(curve.evaluate, th.epsilon, hi, tm, tol)
                           : hi;
    report.death_intervals.push_back({start, end});
  }

  bool monotone = true;
  for (std::size_t i = 0; i + 1 < n && monotone; ++i)
    monotone = vs[i + 1] <= vs[i] + th.monotone_slack;

  if (monotone && vs.back() < th.epsilon) {
    report.classification = Regime::Eraser;
  } else if (!report.death_intervals.empty()) {
    report.classification = Regime::ESD;
  } else if (report.min_negativity >= th.preserved_min) {
    report.classification = Regime::Preserved;
  } else {
    report.classification = Regime::BoundedOscillation;
  }
  return report;
}

double negativity_ab(const ModelParams& params, const InitialAtomState& init, double t) {
  return std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DriveParams>)
          return model1::negativity_ab(p, init, t);
        else
          return model2::negativity_ab(p, init, t);
      },
      params);
}

std::optional<double> model_period(const ModelParams& params) {
  const double period = std::visit(
      [](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DriveParams>)
          return model1::period(p);
        else
          return model2::common_period(p);
      },
      params);
  if (period > 0.0) return period;
  return std::nullopt;
}

double scan_window(const ModelParams& params, double periods, double horizon) {
  const auto period = model_period(params);
  return period ? periods * *period : horizon;
}

SampledCurve sample_negativity(const ModelParams& params, const InitialAtomState& init,
                               double window, std::size_t samples) {
  if (samples < 2) throw ContractError("need at least two samples");
  if (!(window > 0.0)) throw ContractError("window must be positive");
  SampledCurve curve;
  curve.times.resize(samples);
  curve.values.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = window * static_cast<double>(i) / static_cast<double>(samples - 1);
    curve.times[i] = t;
    curve.values[i] = negativity_ab(params, init, t);
  }
  curve.evaluate = [params, init](double t) { return negativity_ab(params, init, t); };
  return curve;
}

}  // namespace esdlab::esd
