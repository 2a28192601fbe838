#include "esdlab/model2.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "esdlab/basis.hpp"
#include "esdlab/measures.hpp"
#include "esdlab/model1.hpp"

namespace esdlab::model2 {

namespace {

void require_closed_form(const InitialAtomState& init) {
  validate(init);
  if (init.phi != 0.0)
    throw UnsupportedParameter(
        "closed forms exist only for phi = 0; use the Fock oracle for general phi");
}

// Field-qubit amplitudes {on |0>, on |1>} attached to a rotated atomic index.
std::array<double, 2> channel_a_field(std::size_t atom, double p, double q) {
  return atom == 0 ? std::array{1.0, 0.0} : std::array{p, q};
}
std::array<double, 2> channel_b_field(std::size_t atom, double p, double q) {
  return atom == 1 ? std::array{1.0, 0.0} : std::array{p, q};
}

}  // namespace

std::pair<double, double> overlaps(const DoubleDriveParams& params, double t) {
  return {model1::overlap_p(params.channel_a, t), model1::overlap_p(params.channel_b, t)};
}

qlin::ComplexMatrix rho_ab(const DoubleDriveParams& params, const InitialAtomState& init,
                           double t) {
  require_closed_form(init);
  const auto [pa, pb] = overlaps(params, t);
  const double c = std::cos(init.theta), s = std::sin(init.theta);
  const double u = 0.25 * (c + s) * (c + s);
  const double v = 0.25 * (c - s) * (c - s);
  const double w = 0.25 * (c * c - s * s);
  const double sign = init.family == Family::Psi ? -1.0 : 1.0;
  const double coh = init.family == Family::Psi ? w : -w;

  qlin::ComplexMatrix rho(4, {2, 2});
  rho(0, 0) = rho(3, 3) = u;
  rho(1, 1) = rho(2, 2) = v;
  rho(0, 3) = rho(3, 0) = sign * u * pa * pb;
  rho(1, 2) = rho(2, 1) = sign * v * pa * pb;
  rho(0, 1) = rho(1, 0) = rho(2, 3) = rho(3, 2) = coh * pb;
  rho(0, 2) = rho(2, 0) = rho(3, 1) = rho(1, 3) = -w * pa;
  return rho;
}

double negativity_ab_from_overlaps(double pa, double pb, double theta) {
  const double pa2 = pa * pa, pb2 = pb * pb;
  const double rad = (1.0 + pa2) * (1.0 + pb2) +
                     (pa2 + pb2 - 1.0 - 4.0 * pa * pb - pa2 * pb2) * std::cos(4.0 * theta);
  const double q =
      -0.125 * (2.0 - 2.0 * pa * pb - std::sqrt(2.0) * std::sqrt(std::max(0.0, rad)));
  return q > measures::kNegativityFloor ? 2.0 * q : 0.0;
}

double negativity_ab(const DoubleDriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  const auto [pa, pb] = overlaps(params, t);
  return negativity_ab_from_overlaps(pa, pb, init.theta);
}

qlin::StateVector effective_pure_state(const DoubleDriveParams& params,
                                       const InitialAtomState& init, double t) {
  require_closed_form(init);
  const FieldQubitFrame fa = model1::field_frame(params.channel_a, t);
  const FieldQubitFrame fb = model1::field_frame(params.channel_b, t);
  const double qa = fa.orthogonal_weight(), qb = fb.orthogonal_weight();
  const qlin::StateVector atoms = basis::atoms_rotated(init);

  qlin::StateVector psi(16, {2, 2, 2, 2});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const auto field_a = channel_a_field(a, fa.p, qa);
      const auto field_b = channel_b_field(b, fb.p, qb);
      for (std::size_t ka = 0; ka < 2; ++ka)
        for (std::size_t kb = 0; kb < 2; ++kb)
          psi[8 * a + 4 * b + 2 * ka + kb] = atoms[2 * a + b] * field_a[ka] * field_b[kb];
    }
  return psi;
}

std::map<std::string, double> PairwiseNegativities::as_map() const {
  return {{"AB", ab}, {"Aa", aa}, {"Bb", bb}, {"Ab", ab_cross}, {"Ba", ba_cross}};
}

PairwiseNegativities pairwise_negativities(const DoubleDriveParams& params,
                                           const InitialAtomState& init, double t) {
  const qlin::StateVector psi = effective_pure_state(params, init, t);
  auto pair = [&](std::size_t i, std::size_t j) {
    const std::array<std::size_t, 2> keep{i, j};
    return measures::negativity(qlin::reduced_density_matrix(psi, keep), 0);
  };
  PairwiseNegativities out;
  out.ab = negativity_ab(params, init, t);
  out.aa = pair(0, 2);
  out.bb = pair(1, 3);
  out.ab_cross = pair(0, 3);
  out.ba_cross = pair(1, 2);
  return out;
}

double common_period(const DoubleDriveParams& params, int max_denominator) {
  const double ta = model1::period(params.channel_a);
  const double tb = model1::period(params.channel_b);
  const bool active_a = params.channel_a.g != 0.0;
  const bool active_b = params.channel_b.g != 0.0;
  if ((active_a && ta == 0.0) || (active_b && tb == 0.0)) return 0.0;
  if (!active_a) return tb;
  if (!active_b) return ta;

  // |delta_A| / |delta_B| = p / q  =>  T = p * 2 pi / |delta_A|
  const double ratio = tb / ta;
  for (int q = 1; q <= max_denominator; ++q) {
    const double p = std::round(ratio * q);
    if (p >= 1.0 && std::abs(ratio * q - p) <= 1e-9 * ratio * q) return p * ta;
  }
  return 0.0;
}

}  // namespace esdlab::model2
