#include "esdlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <numbers>
#include <sstream>

#include "esdlab/basis.hpp"
#include "esdlab/errors.hpp"
#include "esdlab/esd.hpp"
#include "esdlab/model1.hpp"
#include "esdlab/model2.hpp"
#include "esdlab/qlin.hpp"

namespace esdlab::cli {

namespace {

using std::numbers::pi;

std::vector<double> linspace(double hi, std::size_t n) {
  return sweep::AxisRange{0.0, hi, n}.points();
}

bool finite(double x) { return std::isfinite(x); }

std::string describe(const ModelParams& params) {
  std::ostringstream os;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DriveParams>)
          os << "g=" << io::format_number(p.g) << " delta=" << io::format_number(p.delta);
        else
          os << "g_a=" << io::format_number(p.channel_a.g)
             << " delta_a=" << io::format_number(p.channel_a.delta)
             << " g_b=" << io::format_number(p.channel_b.g)
             << " delta_b=" << io::format_number(p.channel_b.delta);
      },
      params);
  return os.str();
}

void common_meta(io::Table& t, std::string_view command, const RunConfig& cfg) {
  t.add_meta("esdlab", std::string(kVersion));
  t.add_meta("command", std::string(command));
  t.add_meta("model", std::to_string(cfg.model));
  t.add_meta("family", std::string(to_string(cfg.family)));
  t.add_meta("theta", cfg.theta);
  t.add_meta("phi", cfg.phi);
}

void report_meta(io::Table& t, const esd::EsdReport& r, double g_ref, std::string_view prefix = "") {
  const std::string p(prefix);
  t.add_meta(p + "min_N_AB", r.min_negativity);
  t.add_meta(p + "argmin_gt", g_ref * r.argmin_t);
  t.add_meta(p + "epsilon", r.epsilon);
  t.add_meta(p + "classification", std::string(esd::to_string(r.classification)));
  std::ostringstream iv;
  for (std::size_t i = 0; i < r.death_intervals.size(); ++i)
    iv << (i ? " " : "") << '[' << io::format_number(g_ref * r.death_intervals[i].start) << ';'
       << io::format_number(g_ref * r.death_intervals[i].end) << ']';
  t.add_meta(p + "death_intervals_gt", r.death_intervals.empty() ? "none" : iv.str());
}

io::Table grid_table(const sweep::SweepGrid& grid, double g_ref) {
  io::Table t;
  t.columns = {"theta", "t", "gt", "N_AB"};
  t.rows.reserve(grid.values.size());
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c)
      t.rows.push_back({grid.theta_axis[r], grid.time_axis[c], g_ref * grid.time_axis[c],
                        grid.at(r, c)});
  return t;
}

double grid_min(const sweep::SweepGrid& grid) {
  return *std::min_element(grid.values.begin(), grid.values.end());
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

double parse_real(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw ContractError("not a number: " + s);
  return v;
}

// ---- figure presets ---------------------------------------------------------

SurfaceOutput surface_figure(int n, const ModelParams& params, double gt_max, int jobs,
                             std::string title) {
  const sweep::AxisRange theta{0.0, pi, 91};
  const sweep::AxisRange time{0.0, gt_max, 401};  // g = 1 in every surface preset
  SurfaceOutput out;
  out.grid = sweep::sweep_theta_time(params, Family::Psi, theta, time, jobs);
  out.table = grid_table(*out.grid, 1.0);
  out.title = std::move(title);
  io::Table& t = out.table;
  t.add_meta("esdlab", std::string(kVersion));
  t.add_meta("command", "figure");
  t.add_meta("figure", std::to_string(n));
  t.add_meta("model", std::holds_alternative<DriveParams>(params) ? "1" : "2");
  t.add_meta("family", "psi");
  t.add_meta("preset", describe(params));
  t.add_meta("gt_max", gt_max);
  t.add_meta("grid_min_N_AB", grid_min(*out.grid));
  const InitialAtomState bell{Family::Psi, pi / 4, 0.0};
  report_meta(t, esd::detect_esd(esd::sample_negativity(params, bell, gt_max, 4001)), 1.0,
              "theta_pi_4_");
  return out;
}

SurfaceOutput figure3() {
  const std::vector<double> ts = linspace(4.0 * pi, 401);
  const InitialAtomState bell{Family::Psi, pi / 4, 0.0};
  struct Curve {
    std::string name;
    DriveParams p;
  };
  const std::vector<Curve> curves{{"a_delta2", {4.0, 2.0}}, {"a_delta3", {4.0, 3.0}},
                                  {"a_delta4", {4.0, 4.0}}, {"b_g1", {1.0, 1.0}},
                                  {"b_g1.5", {1.5, 1.0}},   {"b_g2", {2.0, 1.0}}};
  SurfaceOutput out;
  io::Table& t = out.table;
  t.add_meta("esdlab", std::string(kVersion));
  t.add_meta("command", "figure");
  t.add_meta("figure", "3");
  t.add_meta("model", "1");
  t.add_meta("family", "psi");
  t.add_meta("theta", pi / 4);
  t.add_meta("preset", "(a) g=4 delta=2,3,4; (b) delta=1 g=1,1.5,2");
  t.columns = {"t"};
  for (const auto& c : curves) t.columns.push_back("N_AB_" + c.name);
  for (double time : ts) {
    std::vector<io::Cell> row{time};
    for (const auto& c : curves) row.emplace_back(model1::negativity_ab(c.p, bell, time));
    t.rows.push_back(std::move(row));
  }
  out.title = "figure 3";
  return out;
}

SurfaceOutput figure6() {
  const DriveParams p{1.0, 0.5};
  const std::vector<double> ts = linspace(8.0 * pi, 801);
  const InitialAtomState a{Family::Psi, pi / 6, 0.0};
  const InitialAtomState c{Family::Psi, pi / 4, 0.0};
  const std::vector<std::pair<std::string, double>> b{
      {"pi_12", pi / 12}, {"pi_8", pi / 8}, {"pi_6", pi / 6}, {"pi_4", pi / 4}};
  SurfaceOutput out;
  io::Table& t = out.table;
  t.add_meta("esdlab", std::string(kVersion));
  t.add_meta("command", "figure");
  t.add_meta("figure", "6");
  t.add_meta("model", "1");
  t.add_meta("family", "psi");
  t.add_meta("preset", "g=1 delta=0.5; (a) theta=pi/6; (b) theta=pi/12,pi/8,pi/6,pi/4; (c) theta=pi/4");
  t.columns = {"t", "gt", "a_N_AB", "a_N_Aa", "a_tau"};
  for (const auto& [name, th] : b) t.columns.push_back("b_tau_" + name);
  for (const char* col : {"c_N_AB", "c_N_Aa", "c_tau"}) t.columns.emplace_back(col);
  for (double time : ts) {
    std::vector<io::Cell> row{time, time, model1::negativity_ab(p, a, time),
                              model1::negativity_aa(p, a, time), model1::tangle_aba(p, a, time)};
    for (const auto& [name, th] : b)
      row.emplace_back(model1::tangle_aba(p, {Family::Psi, th, 0.0}, time));
    row.emplace_back(model1::negativity_ab(p, c, time));
    row.emplace_back(model1::negativity_aa(p, c, time));
    row.emplace_back(model1::tangle_aba(p, c, time));
    t.rows.push_back(std::move(row));
  }
  out.title = "figure 6";
  return out;
}

// ---- JSON config ------------------------------------------------------------

double json_real(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) throw ContractError("config key '" + key + "' must be a number");
  return v.get<double>();
}

double json_angle(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return parse_angle(v.get<std::string>());
  return json_real(v, key);
}

std::size_t json_count(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ContractError("config key '" + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::string json_string(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) throw ContractError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

// ---- flag binding -----------------------------------------------------------

// Every option writes into its own holder; the holders are copied into the
// RunConfig only when the flag was actually given, so flags override the file.
class Binder {
 public:
  explicit Binder(CLI::App* app) : app_(app) {}

  template <class T, class Setter>
  CLI::Option* add(const std::string& name, const std::string& help, Setter setter) {
    auto holder = std::make_shared<T>();
    CLI::Option* opt = app_->add_option(name, *holder, help);
    appliers_.emplace_back(opt, [holder, setter](RunConfig& c) { setter(c, *holder); });
    return opt;
  }

  void apply(RunConfig& cfg) const {
    for (const auto& [opt, fn] : appliers_)
      if (opt->count() > 0) fn(cfg);
  }

 private:
  CLI::App* app_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> appliers_;
};

void add_output_flags(Binder& b) {
  b.add<std::string>("--out", "output file (default stdout)",
                     [](RunConfig& c, const std::string& v) { c.out = v; });
  b.add<std::string>("--format", "csv or json",
                     [](RunConfig& c, const std::string& v) { c.format = v; })
      ->check(CLI::IsMember({"csv", "json"}));
  b.add<int>("--jobs", "worker threads (default $ESDLAB_JOBS or all cores)",
             [](RunConfig& c, int v) { c.jobs = v; });
}

void add_model_flags(Binder& b) {
  b.add<int>("--model", "1 or 2", [](RunConfig& c, int v) { c.model = v; });
  b.add<std::string>("--family", "psi or phi",
                     [](RunConfig& c, const std::string& v) { c.family = parse_family(v); });
  b.add<std::string>("--theta", "initial-state angle, e.g. 0.5 or pi/6",
                     [](RunConfig& c, const std::string& v) { c.theta = parse_angle(v); });
  b.add<std::string>("--phi", "relative phase",
                     [](RunConfig& c, const std::string& v) { c.phi = parse_angle(v); });
  b.add<double>("--g", "coupling (Model 1)", [](RunConfig& c, double v) { c.g = v; });
  b.add<double>("--delta", "detuning (Model 1)", [](RunConfig& c, double v) { c.delta = v; });
  b.add<double>("--g-a", "coupling of channel a", [](RunConfig& c, double v) { c.g_a = v; });
  b.add<double>("--delta-a", "detuning of channel a",
                [](RunConfig& c, double v) { c.delta_a = v; });
  b.add<double>("--g-b", "coupling of channel b", [](RunConfig& c, double v) { c.g_b = v; });
  b.add<double>("--delta-b", "detuning of channel b",
                [](RunConfig& c, double v) { c.delta_b = v; });
  b.add<double>("--t-max", "end time (absolute, hbar = 1)",
                [](RunConfig& c, double v) { c.t_max = v; });
  b.add<std::size_t>("--samples", "time samples", [](RunConfig& c, std::size_t v) { c.samples = v; });
  b.add<double>("--epsilon", "ESD threshold", [](RunConfig& c, double v) { c.epsilon = v; });
}

void add_fock_flags(Binder& b) {
  b.add<std::size_t>("--fock-dim", "Fock truncation per field",
                     [](RunConfig& c, std::size_t v) { c.fock.n_fock = v; });
  b.add<double>("--dt", "RK4 step (0 = default)", [](RunConfig& c, double v) { c.fock.dt = v; });
}

void add_svg_flag(Binder& b) {
  b.add<std::string>("--svg", "also write an SVG heatmap",
                     [](RunConfig& c, const std::string& v) { c.svg = v; });
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ContractError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw ContractError("failed writing " + path);
}

void emit(const RunConfig& cfg, const io::Table& table, std::ostream& out) {
  write_text(cfg.out, cfg.format == "json" ? io::to_json(table) : io::to_csv(table), out);
}

void emit_svg(const RunConfig& cfg, const SurfaceOutput& s, std::ostream& out) {
  if (cfg.svg.empty() || !s.grid) return;
  write_text(cfg.svg, io::heatmap_svg(*s.grid, s.title, "gt", s.g_ref), out);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ContractError("cannot read config file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

// ---- config -----------------------------------------------------------------

double parse_angle(std::string_view text) {
  std::string s = lower(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  const std::size_t at = s.find("pi");
  if (at == std::string::npos) return parse_real(s);
  std::string coef = s.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double k = 1.0;
  if (coef == "-")
    k = -1.0;
  else if (!coef.empty())
    k = parse_real(coef);
  const std::string rest = s.substr(at + 2);
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ContractError("bad angle: " + std::string(text));
    den = parse_real(rest.substr(1));
    if (den == 0.0) throw ContractError("bad angle: " + std::string(text));
  }
  return k * pi / den;
}

void validate(const RunConfig& cfg) {
  if (cfg.model != 1 && cfg.model != 2) throw ContractError("model must be 1 or 2");
  for (double x : {cfg.theta, cfg.phi, cfg.epsilon, cfg.fock.dt, cfg.theta_min, cfg.theta_max,
                   cfg.ratio_min, cfg.ratio_max})
    if (!finite(x)) throw ContractError("all numeric settings must be finite");
  const bool m1 = cfg.g || cfg.delta;
  const bool m2 = cfg.g_a || cfg.delta_a || cfg.g_b || cfg.delta_b;
  if (cfg.model == 1 && m2) throw ContractError("Model 1 takes g and delta, not per-channel values");
  if (cfg.model == 2 && m1) throw ContractError("Model 2 takes g_a, delta_a, g_b, delta_b");
  if (cfg.samples < 2) throw ContractError("samples must be at least 2");
  if (!(cfg.epsilon > 0.0)) throw ContractError("epsilon must be positive");
  if (cfg.t_max && (!finite(*cfg.t_max) || !(*cfg.t_max > 0.0)))
    throw ContractError("t_max must be positive and finite");
  if (cfg.fock.n_fock < 2) throw ContractError("fock_dim must be at least 2");
  if (cfg.fock.dt < 0.0) throw ContractError("dt must be non-negative");
  if (cfg.jobs < 0) throw ContractError("jobs must be non-negative");
  if (cfg.format != "csv" && cfg.format != "json") throw ContractError("format must be csv or json");
  if (cfg.theta_samples < 1 || cfg.theta_max < cfg.theta_min)
    throw ContractError("invalid theta range");
  if (cfg.ratio_samples < 1 || !(cfg.ratio_min > 0.0) || cfg.ratio_max < cfg.ratio_min)
    throw ContractError("invalid ratio range");
  validate(initial_state(cfg));
  std::visit([](const auto& p) { esdlab::validate(p); }, model_params(cfg));
}

ModelParams model_params(const RunConfig& cfg) {
  if (cfg.model == 1) return DriveParams{cfg.g.value_or(1.0), cfg.delta.value_or(0.5)};
  return DoubleDriveParams{{cfg.g_a.value_or(1.0), cfg.delta_a.value_or(0.5)},
                           {cfg.g_b.value_or(1.0), cfg.delta_b.value_or(2.0)}};
}

InitialAtomState initial_state(const RunConfig& cfg) { return {cfg.family, cfg.theta, cfg.phi}; }

double reference_g(const RunConfig& cfg) {
  const double g = cfg.model == 1 ? cfg.g.value_or(1.0) : cfg.g_a.value_or(1.0);
  return g > 0.0 ? g : 1.0;
}

double end_time(const RunConfig& cfg) {
  if (cfg.t_max) return *cfg.t_max;
  return esd::scan_window(model_params(cfg), 2.0, 10.0 / reference_g(cfg));
}

RunConfig apply_json(const std::string& json_text, RunConfig cfg) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ContractError("config must be a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "model") {
      if (!v.is_number_integer()) throw ContractError("config key 'model' must be 1 or 2");
      cfg.model = v.get<int>();
    } else if (key == "family") cfg.family = parse_family(json_string(v, key));
    else if (key == "theta") cfg.theta = json_angle(v, key);
    else if (key == "phi") cfg.phi = json_angle(v, key);
    else if (key == "g") cfg.g = json_real(v, key);
    else if (key == "delta") cfg.delta = json_real(v, key);
    else if (key == "g_a") cfg.g_a = json_real(v, key);
    else if (key == "delta_a") cfg.delta_a = json_real(v, key);
    else if (key == "g_b") cfg.g_b = json_real(v, key);
    else if (key == "delta_b") cfg.delta_b = json_real(v, key);
    else if (key == "t_max") cfg.t_max = json_real(v, key);
    else if (key == "samples") cfg.samples = json_count(v, key);
    else if (key == "epsilon") cfg.epsilon = json_real(v, key);
    else if (key == "fock_dim") cfg.fock.n_fock = json_count(v, key);
    else if (key == "dt") cfg.fock.dt = json_real(v, key);
    else if (key == "jobs") cfg.jobs = static_cast<int>(json_count(v, key));
    else if (key == "out") cfg.out = json_string(v, key);
    else if (key == "format") cfg.format = json_string(v, key);
    else if (key == "svg") cfg.svg = json_string(v, key);
    else if (key == "theta_min") cfg.theta_min = json_angle(v, key);
    else if (key == "theta_max") cfg.theta_max = json_angle(v, key);
    else if (key == "theta_samples") cfg.theta_samples = json_count(v, key);
    else if (key == "ratio_min") cfg.ratio_min = json_real(v, key);
    else if (key == "ratio_max") cfg.ratio_max = json_real(v, key);
    else if (key == "ratio_samples") cfg.ratio_samples = json_count(v, key);
    else throw ContractError("unknown config key '" + key + "'");
  }
  return cfg;
}

// ---- commands -----------------------------------------------------------------

io::Table cmd_evolve(const RunConfig& cfg) {
  validate(cfg);
  const ModelParams params = model_params(cfg);
  const InitialAtomState init = initial_state(cfg);
  const double g_ref = reference_g(cfg);
  const double t_end = end_time(cfg);
  const std::vector<double> ts = linspace(t_end, cfg.samples);

  io::Table t;
  common_meta(t, "evolve", cfg);
  t.add_meta("parameters", describe(params));
  t.add_meta("g_ref", g_ref);
  t.add_meta("t_max", t_end);

  if (const auto* p = std::get_if<DriveParams>(&params)) {
    t.columns = {"t", "gt", "P", "N_AB", "N_Aa", "N_Ba", "tau"};
    for (double time : ts)
      t.rows.push_back({time, g_ref * time, model1::overlap_p(*p, time),
                        model1::negativity_ab(*p, init, time), model1::negativity_aa(*p, init, time),
                        model1::negativity_ba(*p, init, time), model1::tangle_aba(*p, init, time)});
  } else {
    const auto& p2 = std::get<DoubleDriveParams>(params);
    t.columns = {"t", "gt", "P_A", "P_B", "N_AB", "N_Aa", "N_Bb", "N_Ab", "N_Ba"};
    for (double time : ts) {
      const auto [pa, pb] = model2::overlaps(p2, time);
      const auto n = model2::pairwise_negativities(p2, init, time);
      t.rows.push_back({time, g_ref * time, pa, pb, n.ab, n.aa, n.bb, n.ab_cross, n.ba_cross});
    }
  }
  esd::SampledCurve curve;
  curve.times = ts;
  curve.values = t.numeric_column("N_AB");
  curve.evaluate = [params, init](double time) { return esd::negativity_ab(params, init, time); };
  esd::Thresholds th;
  th.epsilon = cfg.epsilon;
  report_meta(t, esd::detect_esd(curve, th), g_ref);
  return t;
}

OracleReport cmd_oracle_check(const RunConfig& cfg) {
  validate(cfg);
  const ModelParams params = model_params(cfg);
  const InitialAtomState init = initial_state(cfg);
  const double g_ref = reference_g(cfg);
  const std::vector<double> ts = linspace(end_time(cfg), cfg.samples);

  auto closed_form = [&](double time) {
    const qlin::ComplexMatrix rho =
        cfg.model == 1 ? model1::rho_ab(std::get<DriveParams>(params), init, time)
                       : model2::rho_ab(std::get<DoubleDriveParams>(params), init, time);
    return basis::atoms_rotated_to_energy(rho);
  };
  closed_form(0.0);  // rejects unsupported settings before the expensive part

  const fock::Trajectory traj =
      cfg.model == 1
          ? fock::evolve_effective_m1(std::get<DriveParams>(params), init, ts, cfg.fock)
          : fock::evolve_effective_m2(std::get<DoubleDriveParams>(params), init, ts, cfg.fock);
  const double dt = cfg.fock.dt > 0.0 ? cfg.fock.dt
                    : cfg.model == 1  ? fock::default_dt(std::get<DriveParams>(params))
                                      : fock::default_dt(std::get<DoubleDriveParams>(params));

  OracleReport rep;
  io::Table& t = rep.table;
  common_meta(t, "oracle-check", cfg);
  t.add_meta("parameters", describe(params));
  t.add_meta("g_ref", g_ref);
  t.add_meta("fock_dim", std::to_string(cfg.fock.n_fock));
  t.add_meta("dt", dt);
  t.columns = {"t", "gt", "trace_distance", "norm_drift", "leak"};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& psi = traj.states[i];
    const double d = qlin::trace_distance(closed_form(ts[i]), fock::reduce(psi, {0, 1}));
    rep.max_trace_distance = std::max(rep.max_trace_distance, d);
    t.rows.push_back({ts[i], g_ref * ts[i], d, std::abs(psi.norm() - 1.0), fock::fock_leak(psi)});
  }
  rep.pass = rep.max_trace_distance <= kOracleTolerance;
  t.add_meta("max_trace_distance", rep.max_trace_distance);
  t.add_meta("max_norm_drift", traj.max_norm_drift);
  t.add_meta("max_leak", traj.max_leak);
  t.add_meta("tolerance", kOracleTolerance);
  t.add_meta("verdict", rep.pass ? "PASS" : "FAIL");
  return rep;
}

SurfaceOutput cmd_sweep(const RunConfig& cfg) {
  validate(cfg);
  const ModelParams params = model_params(cfg);
  SurfaceOutput out;
  out.g_ref = reference_g(cfg);
  const double t_end = end_time(cfg);
  out.grid = sweep::sweep_theta_time(params, cfg.family,
                                     {cfg.theta_min, cfg.theta_max, cfg.theta_samples},
                                     {0.0, t_end, cfg.samples}, cfg.jobs);
  out.table = grid_table(*out.grid, out.g_ref);
  out.title = "N_AB model " + std::to_string(cfg.model) + " " + describe(params);
  io::Table& t = out.table;
  t.metadata.clear();
  t.add_meta("esdlab", std::string(kVersion));
  t.add_meta("command", "sweep");
  t.add_meta("model", std::to_string(cfg.model));
  t.add_meta("family", std::string(to_string(cfg.family)));
  t.add_meta("parameters", describe(params));
  t.add_meta("g_ref", out.g_ref);
  t.add_meta("t_max", t_end);
  t.add_meta("grid_min_N_AB", grid_min(*out.grid));
  return out;
}

io::Table cmd_phase_map(const RunConfig& cfg) {
  validate(cfg);
  sweep::PhaseMapSpec spec;
  spec.model = cfg.model;
  spec.ratio_a = spec.ratio_b = {cfg.ratio_min, cfg.ratio_max, cfg.ratio_samples};
  spec.theta = cfg.theta;
  spec.family = cfg.family;
  spec.thresholds.epsilon = cfg.epsilon;
  const sweep::PhaseMap map = sweep::phase_map(spec, cfg.jobs);

  io::Table t;
  common_meta(t, "phase-map", cfg);
  t.add_meta("couplings", "g=1 in every channel; delta = g / ratio");
  t.add_meta("epsilon", cfg.epsilon);
  if (cfg.model == 1) {
    t.add_meta("boundary_ratio", map.boundary.front());
    t.columns = {"ratio", "classification", "min_N_AB"};
  } else {
    t.columns = {"ratio_a", "ratio_b", "classification", "min_N_AB"};
  }
  for (std::size_t r = 0; r < map.rows(); ++r)
    for (std::size_t c = 0; c < map.cols(); ++c) {
      const std::string cls(esd::to_string(map.at(r, c)));
      const double mn = map.min_negativity[r * map.cols() + c];
      if (cfg.model == 1)
        t.rows.push_back({map.ratio_a[r], cls, mn});
      else
        t.rows.push_back({map.ratio_a[r], map.ratio_b[c], cls, mn});
    }
  return t;
}

SurfaceOutput cmd_figure(int n, int jobs) {
  switch (n) {
    case 1: return surface_figure(1, DriveParams{1.0, 0.5}, 8.0 * pi, jobs, "figure 1: g/delta = 2");
    case 2: return surface_figure(2, DriveParams{1.0, 2.0}, 2.0 * pi, jobs, "figure 2: g/delta = 0.5");
    case 3: return figure3();
    case 4: return surface_figure(4, DriveParams{1.0, 0.0}, 6.0, jobs, "figure 4: delta = 0");
    case 5: return surface_figure(5, DriveParams{1.0, 10.0}, 2.0 * pi, jobs, "figure 5: delta = 10g");
    case 6: return figure6();
    case 7:
      return surface_figure(7, DoubleDriveParams{{1.0, 0.5}, {1.0, 2.0}}, 8.0 * pi, jobs,
                            "figure 7: delta_A = 0.5g, delta_B = 2g");
    case 8:
      return surface_figure(8, DoubleDriveParams{{1.0, 1.5}, {1.0, 1.5}}, 8.0 * pi / 3.0, jobs,
                            "figure 8: delta_A = delta_B = 1.5g");
    default: throw ContractError("figure number must be 1..8");
  }
}

// ---- entry point ------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement dynamics of strongly driven atoms in cavities", "esdlab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  auto* evolve = app.add_subcommand("evolve", "closed-form time series");
  auto* oracle = app.add_subcommand("oracle-check", "closed form vs truncated-Fock RK4");
  auto* sweep_cmd = app.add_subcommand("sweep", "N_AB over (theta, t)");
  auto* phase = app.add_subcommand("phase-map", "regime classification over g/delta");
  auto* figure = app.add_subcommand("figure", "data behind figure N");

  std::vector<std::pair<CLI::App*, Binder>> binders;
  for (CLI::App* sub : {evolve, oracle, sweep_cmd, phase}) {
    Binder b(sub);
    sub->add_option("--config", config_path, "JSON config; flags override it");
    add_model_flags(b);
    add_output_flags(b);
    binders.emplace_back(sub, std::move(b));
  }
  add_fock_flags(binders[1].second);
  add_svg_flag(binders[2].second);
  for (auto& [sub, b] : binders) {
    if (sub == sweep_cmd) {
      b.add<std::string>("--theta-min", "smallest theta", [](RunConfig& c, const std::string& v) { c.theta_min = parse_angle(v); });
      b.add<std::string>("--theta-max", "largest theta", [](RunConfig& c, const std::string& v) { c.theta_max = parse_angle(v); });
      b.add<std::size_t>("--theta-samples", "theta grid points", [](RunConfig& c, std::size_t v) { c.theta_samples = v; });
    }
    if (sub == phase) {
      b.add<double>("--ratio-min", "smallest g/delta", [](RunConfig& c, double v) { c.ratio_min = v; });
      b.add<double>("--ratio-max", "largest g/delta", [](RunConfig& c, double v) { c.ratio_max = v; });
      b.add<std::size_t>("--ratio-samples", "ratio grid points", [](RunConfig& c, std::size_t v) { c.ratio_samples = v; });
    }
  }
  int figure_n = 0;
  figure->add_option("n", figure_n, "figure number 1..8")->required();
  Binder figure_binder(figure);
  add_output_flags(figure_binder);
  add_svg_flag(figure_binder);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidConfig;
  }

  try {
    RunConfig cfg;
    if (const char* env = std::getenv("ESDLAB_JOBS"); env && *env) {
      const double j = parse_real(env);
      if (j < 0 || j != std::floor(j)) throw ContractError("ESDLAB_JOBS must be a non-negative integer");
      cfg.jobs = static_cast<int>(j);
    }
    if (!config_path.empty()) cfg = apply_json(read_file(config_path), cfg);

    if (figure->parsed()) {
      figure_binder.apply(cfg);
      validate(cfg);
      const SurfaceOutput s = cmd_figure(figure_n, cfg.jobs);
      emit(cfg, s.table, out);
      emit_svg(cfg, s, out);
      return kOk;
    }
    for (auto& [sub, b] : binders)
      if (sub->parsed()) b.apply(cfg);

    if (evolve->parsed()) {
      emit(cfg, cmd_evolve(cfg), out);
    } else if (oracle->parsed()) {
      const OracleReport rep = cmd_oracle_check(cfg);
      emit(cfg, rep.table, out);
      err << "oracle-check: max trace distance " << io::format_number(rep.max_trace_distance)
          << (rep.pass ? " PASS" : " FAIL") << '\n';
      return rep.pass ? kOk : kCheckFailed;
    } else if (sweep_cmd->parsed()) {
      const SurfaceOutput s = cmd_sweep(cfg);
      emit(cfg, s.table, out);
      emit_svg(cfg, s, out);
    } else if (phase->parsed()) {
      emit(cfg, cmd_phase_map(cfg), out);
    }
    return kOk;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kTruncationLeak;
  } catch (const StepSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kNormDrift;
  } catch (const std::invalid_argument& e) {
    err << "invalid config: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace esdlab::cli
