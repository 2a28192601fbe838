#pragma once

// Command-line front end. Each subcommand is also callable in-process through
// the cmd_* functions, which return the table the binary would write.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "esdlab/fock_oracle.hpp"
#include "esdlab/io.hpp"
#include "esdlab/params.hpp"
#include "esdlab/sweep.hpp"

namespace esdlab::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // oracle-check ran but the trace distance exceeded its tolerance
  kInvalidConfig = 2,
  kNormDrift = 3,
  kTruncationLeak = 4,
};

/// Oracle-check tolerance on the trace distance.
inline constexpr double kOracleTolerance = 1e-6;

/// Frequencies are in units of g; the coupling parameters default to 1.
/// Model-specific parameters are optional so that a config carrying the
/// other model's parameter set can be rejected.
struct RunConfig {
  int model = 1;
  Family family = Family::Psi;
  double theta = 0.7853981633974483;  // pi / 4
  double phi = 0.0;
  std::optional<double> g, delta;                      // Model 1
  std::optional<double> g_a, delta_a, g_b, delta_b;    // Model 2
  /// Absolute end time; unset picks two periods (or gt = 10 without one).
  std::optional<double> t_max;
  std::size_t samples = 201;
  double epsilon = 1e-3;
  fock::FockConfig fock{};
  int jobs = 0;
  std::string out;  // empty: stdout
  std::string format = "csv";
  std::string svg;  // empty: no heatmap
  // sweep
  double theta_min = 0.0;
  double theta_max = 3.141592653589793;
  std::size_t theta_samples = 91;
  // phase-map (both axes for Model 2)
  double ratio_min = 0.25;
  double ratio_max = 3.0;
  std::size_t ratio_samples = 45;
};

/// Throws ContractError describing the first violated rule.
void validate(const RunConfig& cfg);
ModelParams model_params(const RunConfig& cfg);
InitialAtomState initial_state(const RunConfig& cfg);
/// Coupling used for the gt column: g (Model 1) or g_A (Model 2), 1 if zero.
double reference_g(const RunConfig& cfg);
double end_time(const RunConfig& cfg);

/// Overlays a JSON object onto `base`. Keys use the flag names with '_' in
/// place of '-'; unknown keys throw ContractError.
RunConfig apply_json(const std::string& json_text, RunConfig base);

/// Accepts plain numbers and multiples of pi such as "pi/4", "3pi/4", "2*pi".
double parse_angle(std::string_view text);

io::Table cmd_evolve(const RunConfig& cfg);

struct OracleReport {
  io::Table table;
  double max_trace_distance = 0.0;
  bool pass = false;
};
/// Throws StepSizeError / TruncationError from the integrator.
OracleReport cmd_oracle_check(const RunConfig& cfg);

struct SurfaceOutput {
  io::Table table;
  std::optional<sweep::SweepGrid> grid;
  double g_ref = 1.0;
  std::string title;
};
SurfaceOutput cmd_sweep(const RunConfig& cfg);
io::Table cmd_phase_map(const RunConfig& cfg);
/// Throws ContractError for n outside 1..8.
SurfaceOutput cmd_figure(int n, int jobs = 0);

/// Entry point of the binary; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace esdlab::cli
