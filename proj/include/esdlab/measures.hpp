#pragma once

#include <array>
#include <cstddef>

#include "esdlab/qlin.hpp"

namespace esdlab::measures {

using qlin::complex;

/// Eigenvalues of the partial transpose in (-kNegativityFloor, 0) count as zero.
inline constexpr double kNegativityFloor = 1e-13;

/// Amplitudes psi_{ijk} in binary order psi_000 ... psi_111, qubit order (A, B, field).
struct ThreeQubitAmplitudes {
  std::array<complex, 8> psi{};

  complex operator()(int i, int j, int k) const { return psi[4 * i + 2 * j + k]; }
  double norm_squared() const;

  /// Requires an 8-dimensional vector.
  static ThreeQubitAmplitudes from_state(const qlin::StateVector& v);
};

/// N(rho) = 2 max{0, -lambda_min(rho^{T_cut})}.
///
/// Accepts qubit x qudit inputs as well as two qubits. For 2 x d states the
/// partial transpose can carry more than one negative eigenvalue; only the
/// lowest one enters, exactly as in the two-qubit definition, so this is not
/// the "sum of negative eigenvalues" negativity used elsewhere in the
/// literature.
///
/// Throws ContractError when |Tr rho - 1| > 1e-10.
double negativity(const qlin::ComplexMatrix& rho, std::size_t cut = 0);

/// tau_3 = 4 |d1 - 2 d2 + 4 d3| (Coffman-Kundu-Wootters residual tangle).
/// Throws ContractError for amplitudes whose squared norm is off by > 1e-9.
double three_tangle(const ThreeQubitAmplitudes& amps);

}  // namespace esdlab::measures
