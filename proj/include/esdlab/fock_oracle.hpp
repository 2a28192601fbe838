#pragma once

// Numerical ground truth for the closed forms: explicit RK4 on the
// Schroedinger equation in a truncated Fock space.
//
// States are ordered (A, B, a[, b]) with the atoms in the energy basis
// (index 0 = |e>, 1 = |g>; see basis.hpp) and each field truncated to
// n_fock number states. Every field starts in vacuum.

#include <cstddef>
#include <span>
#include <vector>

#include "esdlab/params.hpp"
#include "esdlab/qlin.hpp"

namespace esdlab::fock {

struct FockConfig {
  std::size_t n_fock = 40;
  /// Integrator step; 0 selects the default T_char / 4096.
  double dt = 0.0;
  /// Largest allowed population in the top two Fock levels.
  double leak_tol = 1e-10;
  /// Largest allowed | ||psi|| - 1 |.
  double norm_tol = 1e-9;
};

/// Full single-atom-plus-cavity Hamiltonian with a classical drive on A:
///   H = w_a/2 sz_A + w_b/2 sz_B + w_f a^+a + rabi (e^{-i w_d t} s+_A + h.c.) + g (s+_A a + h.c.)
struct LabFrameParams {
  double omega_a = 0.0;
  double omega_b = 0.0;
  double omega_f = 0.5;
  double omega_d = 0.0;
  double rabi = 10.0;
  double g = 1.0;

  double detuning() const { return omega_f - omega_a; }
};

/// States sampled at the requested times, plus the worst integrator diagnostics.
struct Trajectory {
  std::vector<double> times;
  std::vector<qlin::StateVector> states;
  double max_norm_drift = 0.0;
  double max_leak = 0.0;
};

/// Bell-like atoms tensored with n_fields vacua.
qlin::StateVector initial_state(const InitialAtomState& init, std::size_t n_fields,
                                std::size_t n_fock);

// T_char / 4096 with T_char = 2 pi / max(characteristic frequencies).
double default_dt(const DriveParams& params);
double default_dt(const DoubleDriveParams& params);
double default_dt(const LabFrameParams& params);

// `times` must be non-decreasing and >= 0. All entry points throw
// StepSizeError on norm drift above cfg.norm_tol and TruncationError on a
// Fock leak above cfg.leak_tol, checked after every step.

/// (g/2)(s+_A + s_A)(a e^{i delta t} + a^+ e^{-i delta t}) on (A, B, a).
Trajectory evolve_effective_m1(const DriveParams& params, const qlin::StateVector& initial,
                               std::span<const double> times, const FockConfig& cfg = {});
Trajectory evolve_effective_m1(const DriveParams& params, const InitialAtomState& init,
                               std::span<const double> times, const FockConfig& cfg = {});
qlin::StateVector evolve_effective_m1(const DriveParams& params, const InitialAtomState& init,
                                      double t, const FockConfig& cfg = {});

/// Sum of the two per-channel generators on (A, B, a, b).
Trajectory evolve_effective_m2(const DoubleDriveParams& params, const qlin::StateVector& initial,
                               std::span<const double> times, const FockConfig& cfg = {});
Trajectory evolve_effective_m2(const DoubleDriveParams& params, const InitialAtomState& init,
                               std::span<const double> times, const FockConfig& cfg = {});
qlin::StateVector evolve_effective_m2(const DoubleDriveParams& params,
                                      const InitialAtomState& init, double t,
                                      const FockConfig& cfg = {});

/// Lab-frame propagation on (A, B, a). Requires omega_a == omega_d; also
/// throws StepSizeError when rabi * dt > 0.05.
Trajectory evolve_lab_frame(const LabFrameParams& params, const InitialAtomState& init,
                            std::span<const double> times, const FockConfig& cfg = {});
qlin::StateVector evolve_lab_frame(const LabFrameParams& params, const InitialAtomState& init,
                                   double t, const FockConfig& cfg = {});

/// Moves a lab-frame two-atom density matrix (energy basis) into the frame of
/// the effective model: free atomic precession is undone and atom A is
/// counter-rotated about x by rabi * t.
qlin::ComplexMatrix lab_to_effective_frame(const qlin::ComplexMatrix& rho_ab,
                                           const LabFrameParams& params, double t);

/// Unit-trace Hermitian reduced density matrix of a pure state.
qlin::ComplexMatrix reduce(const qlin::StateVector& state, std::span<const std::size_t> keep);
qlin::ComplexMatrix reduce(const qlin::StateVector& state, std::initializer_list<std::size_t> keep);

/// Population in the top two number states, summed over the field factors
/// (factor index >= 2).
double fock_leak(const qlin::StateVector& state);

/// <n> of the field factor `field` (2 = a, 3 = b).
double mean_photon_number(const qlin::StateVector& state, std::size_t field);

}  // namespace esdlab::fock
