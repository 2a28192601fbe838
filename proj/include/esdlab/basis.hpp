#pragma once

// Conversions between the two single-atom bases used in the project.
//
//   energy basis:  index 0 = |e>, index 1 = |g>
//   rotated basis: index 0 = |+> = (|g> + |e>)/sqrt2, index 1 = |-> = (|g> - |e>)/sqrt2
//
// The closed forms live in the rotated basis (|++>, |+->, |-+>, |-->); the
// Fock oracle propagates in the energy basis.

#include "esdlab/params.hpp"
#include "esdlab/qlin.hpp"

namespace esdlab::basis {

inline constexpr std::size_t kExcited = 0;
inline constexpr std::size_t kGround = 1;

/// Columns are |+>, |-> written in the energy basis.
qlin::ComplexMatrix rotated_in_energy();

/// Two-atom density matrix, rotated -> energy basis.
qlin::ComplexMatrix atoms_rotated_to_energy(const qlin::ComplexMatrix& rho_rotated);
/// Two-atom density matrix, energy -> rotated basis.
qlin::ComplexMatrix atoms_energy_to_rotated(const qlin::ComplexMatrix& rho_energy);

/// Initial two-atom state in the energy basis, factors (A, B).
qlin::StateVector atoms_energy(const InitialAtomState& init);
/// The same state expanded in the rotated basis.
qlin::StateVector atoms_rotated(const InitialAtomState& init);

}  // namespace esdlab::basis
