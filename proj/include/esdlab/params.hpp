#pragma once

#include <complex>
#include <numbers>
#include <string_view>
#include <variant>

namespace esdlab {

/// One atom-cavity channel. Frequencies with hbar = 1; delta = omega_f - omega_a.
struct DriveParams {
  double g = 1.0;
  double delta = 0.5;
};

/// Two independent channels: atom A in cavity a, atom B in cavity b.
struct DoubleDriveParams {
  DriveParams channel_a;
  DriveParams channel_b;
};

/// Model 1 is a single DriveParams, Model 2 a DoubleDriveParams.
using ModelParams = std::variant<DriveParams, DoubleDriveParams>;

/// Bell-like atomic families:
///   Psi: cos(theta)|e,g> + sin(theta) e^{i phi}|g,e>
///   Phi: cos(theta)|e,e> + sin(theta) e^{i phi}|g,g>
enum class Family { Psi, Phi };

struct InitialAtomState {
  Family family = Family::Psi;
  double theta = std::numbers::pi / 4;  // [0, 2 pi]
  double phi = 0.0;                     // [0, pi]
};

/// Throws ContractError when theta or phi leave their declared ranges.
void validate(const InitialAtomState& init);
/// Throws ContractError for g < 0 or non-finite values.
void validate(const DriveParams& params);
void validate(const DoubleDriveParams& params);

std::string_view to_string(Family f);
/// Accepts "psi" / "phi" (case-insensitive); throws ContractError otherwise.
Family parse_family(std::string_view s);

/// Effective field-qubit frame of one channel: |0> = |alpha>, and
/// |1> the normalized part of |-alpha> orthogonal to it. p = <alpha|-alpha>.
struct FieldQubitFrame {
  std::complex<double> alpha;
  double p = 1.0;

  /// sqrt(1 - p^2), or 0 when the |1> direction is degenerate.
  double orthogonal_weight() const;
};

/// Below this value of 1 - p^2 the |1> field-qubit vector is left undefined
/// and carries no amplitude.
inline constexpr double kFrameDegeneracy = 1e-30;

}  // namespace esdlab
