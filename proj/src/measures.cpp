#include "esdlab/measures.hpp"

#include <algorithm>
#include <cmath>

namespace esdlab::measures {

double ThreeQubitAmplitudes::norm_squared() const {
  double s = 0.0;
  for (const complex& a : psi) s += std::norm(a);
  return s;
}

ThreeQubitAmplitudes ThreeQubitAmplitudes::from_state(const qlin::StateVector& v) {
  if (v.dim() != 8) throw StructureError("three-qubit amplitudes need an 8-dimensional state");
  ThreeQubitAmplitudes out;
  std::copy(v.amplitudes().begin(), v.amplitudes().end(), out.psi.begin());
  return out;
}

double negativity(const qlin::ComplexMatrix& rho, std::size_t cut) {
  if (std::abs(rho.trace() - 1.0) > 1e-10)
    throw ContractError("negativity: density matrix must have unit trace");
  const double lambda_min = qlin::herm_eigenvalues(qlin::partial_transpose(rho, cut)).front();
  if (lambda_min > -kNegativityFloor) return 0.0;
  return -2.0 * lambda_min;
}

double three_tangle(const ThreeQubitAmplitudes& a) {
  if (std::abs(a.norm_squared() - 1.0) > 1e-9)
    throw ContractError("three_tangle: amplitudes must be normalized");
  const complex p000 = a(0, 0, 0), p001 = a(0, 0, 1), p010 = a(0, 1, 0), p011 = a(0, 1, 1);
  const complex p100 = a(1, 0, 0), p101 = a(1, 0, 1), p110 = a(1, 1, 0), p111 = a(1, 1, 1);

  const complex d1 = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                     p010 * p010 * p101 * p101 + p100 * p100 * p011 * p011;
  const complex d2 = p000 * p111 * p011 * p100 + p000 * p111 * p101 * p010 +
                     p000 * p111 * p110 * p001 + p011 * p100 * p101 * p010 +
                     p011 * p100 * p110 * p001 + p101 * p010 * p110 * p001;
  const complex d3 = p000 * p110 * p101 * p011 + p111 * p001 * p010 * p100;
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

}  // namespace esdlab::measures
