#include "esdlab/basis.hpp"

#include <cmath>

namespace esdlab::basis {

qlin::ComplexMatrix rotated_in_energy() {
  const double h = 1.0 / std::sqrt(2.0);
  // |+> = (|g> + |e>)/sqrt2 -> ( h, h);  |-> = (|g> - |e>)/sqrt2 -> (-h, h)
  return qlin::ComplexMatrix::from_rows({{h, -h}, {h, h}});
}

qlin::ComplexMatrix atoms_rotated_to_energy(const qlin::ComplexMatrix& rho_rotated) {
  const qlin::ComplexMatrix r = rotated_in_energy();
  const qlin::ComplexMatrix rr = qlin::kron(r, r);
  qlin::ComplexMatrix out = rr * rho_rotated * rr.adjoint();
  out.set_subsystem_dims({2, 2});
  return out;
}

qlin::ComplexMatrix atoms_energy_to_rotated(const qlin::ComplexMatrix& rho_energy) {
  const qlin::ComplexMatrix r = rotated_in_energy();
  const qlin::ComplexMatrix rr = qlin::kron(r, r);
  qlin::ComplexMatrix out = rr.adjoint() * rho_energy * rr;
  out.set_subsystem_dims({2, 2});
  return out;
}

qlin::StateVector atoms_energy(const InitialAtomState& init) {
  validate(init);
  const double c = std::cos(init.theta), s = std::sin(init.theta);
  const qlin::complex phase = std::polar(1.0, init.phi);
  qlin::StateVector v(4, {2, 2});
  if (init.family == Family::Psi) {
    v[2 * kExcited + kGround] = c;
    v[2 * kGround + kExcited] = s * phase;
  } else {
    v[2 * kExcited + kExcited] = c;
    v[2 * kGround + kGround] = s * phase;
  }
  return v;
}

qlin::StateVector atoms_rotated(const InitialAtomState& init) {
  const qlin::ComplexMatrix r = rotated_in_energy();
  qlin::StateVector out = qlin::kron(r, r).adjoint() * atoms_energy(init);
  return out;
}

}  // namespace esdlab::basis
