#include "esdlab/model1.hpp"

#include <cmath>
#include <numbers>

#include "esdlab/basis.hpp"
#include "esdlab/measures.hpp"

namespace esdlab::model1 {

namespace {

bool at_resonance(const DriveParams& p) {
  return std::abs(p.delta) < kResonanceRatio * p.g;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ContractError("time must be finite and >= 0");
}

void require_closed_form(const InitialAtomState& init) {
  validate(init);
  if (init.phi != 0.0)
    throw UnsupportedParameter(
        "closed forms exist only for phi = 0; use the Fock oracle for general phi");
}

// 2 max{0, q} with the same round-off floor the eigenvalue route applies.
double from_q(double q) { return q > measures::kNegativityFloor ? 2.0 * q : 0.0; }

}  // namespace

complex alpha_of_t(const DriveParams& params, double t) {
  validate(params);
  require_time(t);
  if (params.g == 0.0) return 0.0;
  if (at_resonance(params)) return {0.0, -0.5 * params.g * t};
  // (g / 2 delta)(1 - e^{i delta t}) = -i (g/delta) sin(delta t / 2) e^{i delta t / 2},
  // written without the cancellation in 1 - e^{i delta t}.
  const double half = 0.5 * params.delta * t;
  return complex{0.0, -1.0} * (params.g / params.delta) * std::sin(half) * std::polar(1.0, half);
}

double overlap_p(const DriveParams& params, double t) {
  validate(params);
  require_time(t);
  if (params.g == 0.0) return 1.0;
  if (at_resonance(params)) return std::exp(-0.5 * params.g * params.g * t * t);
  // (g/delta)^2 (cos(delta t) - 1) = -2 (g/delta)^2 sin^2(delta t / 2)
  const double ratio = params.g / params.delta;
  const double s = std::sin(0.5 * params.delta * t);
  return std::exp(-2.0 * ratio * ratio * s * s);
}

FieldQubitFrame field_frame(const DriveParams& params, double t) {
  return {alpha_of_t(params, t), overlap_p(params, t)};
}

double period(const DriveParams& params) {
  if (params.g == 0.0 || at_resonance(params)) return 0.0;
  return 2.0 * std::numbers::pi / std::abs(params.delta);
}

EffectivePureState effective_pure_state(const DriveParams& params, const InitialAtomState& init,
                                        double t) {
  require_closed_form(init);
  const FieldQubitFrame frame = field_frame(params, t);
  const double q = frame.orthogonal_weight();
  const qlin::StateVector atoms = basis::atoms_rotated(init);

  qlin::StateVector psi(8, {2, 2, 2});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const complex c = atoms[2 * a + b];
      if (a == 0) {
        psi[4 * a + 2 * b] = c;  // |+_A> carries |alpha> = |0>
      } else {
        psi[4 * a + 2 * b] = c * frame.p;  // |-alpha> = P|0> + sqrt(1-P^2)|1>
        psi[4 * a + 2 * b + 1] = c * q;
      }
    }
  return {std::move(psi), {"A", "B", "a"}};
}

qlin::ComplexMatrix rho_ab(const DriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  const double p = overlap_p(params, t);
  const double c = std::cos(init.theta), s = std::sin(init.theta);
  const double u = 0.25 * (c + s) * (c + s);
  const double v = 0.25 * (c - s) * (c - s);
  const double w = 0.25 * (c * c - s * s);
  const double sign = init.family == Family::Psi ? -1.0 : 1.0;  // rho_14, rho_23
  const double coh = init.family == Family::Psi ? w : -w;        // rho_12, rho_34

  qlin::ComplexMatrix rho(4, {2, 2});
  rho(0, 0) = rho(3, 3) = u;
  rho(1, 1) = rho(2, 2) = v;
  rho(0, 3) = rho(3, 0) = sign * u * p;
  rho(1, 2) = rho(2, 1) = sign * v * p;
  rho(0, 1) = rho(1, 0) = rho(2, 3) = rho(3, 2) = coh;
  rho(0, 2) = rho(2, 0) = rho(3, 1) = rho(1, 3) = -w * p;
  return rho;
}

double negativity_ab_from_overlap(double p, double theta) {
  const double radical = std::sqrt(1.0 + p * p - 2.0 * p * std::cos(4.0 * theta));
  return from_q(0.25 * (radical - (1.0 - p)));
}

double negativity_aa_from_overlap(double p, double theta) {
  const double c2 = std::cos(2.0 * theta);
  const double c4 = std::cos(4.0 * theta);
  double q;
  if (c2 >= 0.0) {
    const double rad = std::max(0.0, 3.0 + (4.0 - 8.0 * p * p) * c2 + c4);
    q = -0.125 * (2.0 - 2.0 * c2 - std::sqrt(2.0) * std::sqrt(rad));
  } else {
    const double rad = std::max(0.0, 3.0 + (8.0 * p * p - 4.0) * c2 + c4);
    q = -0.125 * (2.0 + 2.0 * c2 - std::sqrt(2.0) * std::sqrt(rad));
  }
  return from_q(q);
}

double negativity_ba_from_overlap(double p, double theta) {
  const double c2 = std::cos(2.0 * theta);
  const double q = c2 >= 0.0 ? -0.5 * (1.0 - p * c2) : -0.5 * (1.0 + p * c2);
  return from_q(q);
}

double tangle_aba_from_overlap(double p, double theta) {
  return 0.5 * (1.0 - p * p) * (1.0 - std::cos(4.0 * theta));
}

double negativity_ab(const DriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  return negativity_ab_from_overlap(overlap_p(params, t), init.theta);
}

double negativity_aa(const DriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  return negativity_aa_from_overlap(overlap_p(params, t), init.theta);
}

double negativity_ba(const DriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  return negativity_ba_from_overlap(overlap_p(params, t), init.theta);
}

double tangle_aba(const DriveParams& params, const InitialAtomState& init, double t) {
  require_closed_form(init);
  return tangle_aba_from_overlap(overlap_p(params, t), init.theta);
}

}  // namespace esdlab::model1
