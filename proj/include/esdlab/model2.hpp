#pragma once

// Closed-form dynamics of the double driven JCM: atom A in cavity a, atom B in
// cavity b, no cross couplings. Each channel displaces its own field exactly
// as in model1, so P_A and P_B are the model1 overlaps of the two channels.
//
// The field-qubit frames follow the construction used for the closed forms:
//   channel a: |0_a> = |alpha>,  |1_a> from |-alpha>
//   channel b: |0_b> = |-beta>,  |1_b> from |beta>     (note the opposite sign)
// Four-party ordering is (A, B, a, b).

#include <map>
#include <string>
#include <utility>

#include "esdlab/params.hpp"
#include "esdlab/qlin.hpp"

namespace esdlab::model2 {

/// (P_A, P_B); a channel with g = 0 has P = 1 at all times.
std::pair<double, double> overlaps(const DoubleDriveParams& params, double t);

qlin::ComplexMatrix rho_ab(const DoubleDriveParams& params, const InitialAtomState& init, double t);

double negativity_ab(const DoubleDriveParams& params, const InitialAtomState& init, double t);
double negativity_ab_from_overlaps(double pa, double pb, double theta);

/// Pure state over (A rotated, B rotated, field-qubit a, field-qubit b).
qlin::StateVector effective_pure_state(const DoubleDriveParams& params,
                                       const InitialAtomState& init, double t);

struct PairwiseNegativities {
  double ab = 0.0;  // atoms
  double aa = 0.0;  // atom A, cavity a
  double bb = 0.0;  // atom B, cavity b
  double ab_cross = 0.0;  // atom A, cavity b
  double ba_cross = 0.0;  // atom B, cavity a

  /// Keys "AB", "Aa", "Bb", "Ab", "Ba".
  std::map<std::string, double> as_map() const;
};

/// Negativities of every atom/atom and atom/field pair of the effective state.
/// No closed forms exist for the atom/field pairs, so they are computed from
/// the reduced matrices; AB uses the printed closed form.
PairwiseNegativities pairwise_negativities(const DoubleDriveParams& params,
                                           const InitialAtomState& init, double t);

/// Smallest T > 0 at which both channels return to vacuum overlap 1, when the
/// detunings are commensurate with denominators up to max_denominator.
/// Channels that never revive (resonant) make this 0; channels with g = 0 are
/// ignored. Returns 0 if no common period was found.
double common_period(const DoubleDriveParams& params, int max_denominator = 64);

}  // namespace esdlab::model2
