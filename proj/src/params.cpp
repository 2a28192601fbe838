#include "esdlab/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "esdlab/errors.hpp"

namespace esdlab {

void validate(const InitialAtomState& init) {
  constexpr double slack = 1e-12;
  if (!(init.theta >= -slack && init.theta <= 2 * std::numbers::pi + slack))
    throw ContractError("theta must lie in [0, 2 pi]");
  if (!(init.phi >= -slack && init.phi <= std::numbers::pi + slack))
    throw ContractError("phi must lie in [0, pi]");
}

void validate(const DriveParams& params) {
  if (!std::isfinite(params.g) || !std::isfinite(params.delta))
    throw ContractError("drive parameters must be finite");
  if (params.g < 0) throw ContractError("coupling g must be non-negative");
}

void validate(const DoubleDriveParams& params) {
  validate(params.channel_a);
  validate(params.channel_b);
}

std::string_view to_string(Family f) { return f == Family::Psi ? "psi" : "phi"; }

Family parse_family(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "psi") return Family::Psi;
  if (lower == "phi") return Family::Phi;
  throw ContractError("unknown family '" + std::string(s) + "' (expected psi or phi)");
}

double FieldQubitFrame::orthogonal_weight() const {
  const double w = 1.0 - p * p;
  return w < kFrameDegeneracy ? 0.0 : std::sqrt(w);
}

}  // namespace esdlab
