#pragma once

// Closed-form dynamics of a strongly driven atom A off-resonantly coupled to
// one cavity mode a, with atom B isolated. The cavity starts in vacuum and
// the atoms in a Bell-like state with phi = 0.
//
// Under the conditional-displacement Hamiltonian (g/2) sx_A (a e^{i delta t} + h.c.)
// the rotated atomic states |+_A>, |-_A> drive the field to |alpha>, |-alpha>:
//
//   alpha(t) = (g / 2 delta) (1 - e^{i delta t})
//   P(t)     = <alpha|-alpha> = exp((g/delta)^2 (cos(delta t) - 1))
//
// All density matrices are returned in the rotated basis (|++>,|+->,|-+>,|-->);
// see basis.hpp for the energy-basis conversion.

#include <string>
#include <vector>

#include "esdlab/params.hpp"
#include "esdlab/qlin.hpp"

namespace esdlab::model1 {

using qlin::complex;

/// |delta| below this fraction of g switches to the analytic resonance limits.
inline constexpr double kResonanceRatio = 1e-8;

complex alpha_of_t(const DriveParams& params, double t);
double overlap_p(const DriveParams& params, double t);
FieldQubitFrame field_frame(const DriveParams& params, double t);

/// Amplitudes over (A, B, field-qubit), index 4*A + 2*B + f, with A, B in the
/// rotated basis (0 = +, 1 = -) and f in the {|0>, |1>} field frame.
struct EffectivePureState {
  qlin::StateVector state;
  std::vector<std::string> labels;  // {"A", "B", "a"}
};

EffectivePureState effective_pure_state(const DriveParams& params, const InitialAtomState& init,
                                        double t);

/// Reduced atomic state. Throws UnsupportedParameter for phi != 0; the Fock
/// oracle handles general phi.
qlin::ComplexMatrix rho_ab(const DriveParams& params, const InitialAtomState& init, double t);

// Entanglement quantifiers. Every one of them is identical for the Psi and Phi
// families (they differ by a local sign flip on B), so only theta and P enter.
double negativity_ab(const DriveParams& params, const InitialAtomState& init, double t);
double negativity_aa(const DriveParams& params, const InitialAtomState& init, double t);
double negativity_ba(const DriveParams& params, const InitialAtomState& init, double t);
double tangle_aba(const DriveParams& params, const InitialAtomState& init, double t);

// The same closed forms expressed directly through the overlap P.
double negativity_ab_from_overlap(double p, double theta);
double negativity_aa_from_overlap(double p, double theta);
double negativity_ba_from_overlap(double p, double theta);
double tangle_aba_from_overlap(double p, double theta);

/// Period of every Model 1 observable, 2 pi / |delta|; 0 at resonance or for g = 0.
double period(const DriveParams& params);

}  // namespace esdlab::model1
