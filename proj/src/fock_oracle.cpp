#include "esdlab/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "esdlab/basis.hpp"
#include "sparse_operator.hpp"

namespace esdlab::fock {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

using detail::SparseOperator;
using detail::TimeDependentHamiltonian;
using qlin::complex;
using qlin::ComplexMatrix;

constexpr double kStepsPerPeriod = 4096.0;

ComplexMatrix sigma_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
ComplexMatrix sigma_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});  // |e><e| - |g><g|
}
ComplexMatrix sigma_plus() {
  ComplexMatrix m(2);
  m(basis::kExcited, basis::kGround) = 1.0;  // |e><g|
  return m;
}
ComplexMatrix sigma_minus() { return sigma_plus().adjoint(); }

double dt_for(double max_frequency) {
  const double w = max_frequency > 0.0 ? max_frequency : 1.0;
  return 2.0 * std::numbers::pi / w / kStepsPerPeriod;
}

void check_config(const FockConfig& cfg) {
  if (cfg.n_fock < 4) throw ContractError("n_fock must be at least 4");
  if (cfg.dt < 0.0 || !std::isfinite(cfg.dt)) throw ContractError("dt must be finite and >= 0");
}

void check_initial(const qlin::StateVector& psi, const qlin::Dims& dims) {
  if (psi.subsystem_dims() != dims)
    throw StructureError("initial state does not match the oracle's tensor structure");
}

// Indices of basis states whose field factors (>= 2) sit in the top two levels.
std::vector<std::size_t> leak_indices(const qlin::Dims& dims) {
  std::vector<std::size_t> out;
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    bool top = false;
    for (std::size_t k = dims.size(); k-- > 0;) {
      const std::size_t digit = rem % dims[k];
      rem /= dims[k];
      if (k >= 2 && digit + 2 >= dims[k]) top = true;
    }
    if (top) out.push_back(idx);
  }
  return out;
}

Trajectory propagate(const TimeDependentHamiltonian& h, qlin::StateVector psi,
                     std::span<const double> times, double dt, const FockConfig& cfg) {
  const std::size_t n = psi.dim();
  const std::vector<std::size_t> top = leak_indices(psi.subsystem_dims());
  std::vector<complex> k1(n), k2(n), k3(n), k4(n), tmp(n);
  const double initial_norm = psi.norm();

  Trajectory traj;
  traj.times.assign(times.begin(), times.end());
  traj.states.reserve(times.size());

  auto check = [&](double t) {
    const double drift = std::abs(psi.norm() - initial_norm);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    if (drift > cfg.norm_tol)
      throw StepSizeError("norm drift " + num(drift) + " at t = " + num(t) +
                              " exceeds tolerance; reduce dt",
                          drift);
    double leak = 0.0;
    for (std::size_t i : top) leak += std::norm(psi[i]);
    traj.max_leak = std::max(traj.max_leak, leak);
    if (leak > cfg.leak_tol)
      throw TruncationError("Fock leak " + num(leak) + " at t = " + num(t) +
                                " exceeds tolerance; increase n_fock",
                            leak);
  };

  double t = 0.0;
  for (double target : times) {
    if (!(target >= t)) throw ContractError("sample times must be non-decreasing and >= 0");
    const double span = target - t;
    const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
    const double step = steps ? span / static_cast<double>(steps) : 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      auto y = psi.amplitudes();
      h.derivative(t, y, k1);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
      h.derivative(t + 0.5 * step, tmp, k2);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
      h.derivative(t + 0.5 * step, tmp, k3);
      for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + step * k3[i];
      h.derivative(t + step, tmp, k4);
      for (std::size_t i = 0; i < n; ++i)
        y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      t = s + 1 == steps ? target : t + step;
      check(t);
    }
    t = target;
    traj.states.push_back(psi);
  }
  return traj;
}

// (g/2) sx_X (a e^{i delta t} + a^+ e^{-i delta t}) on factors (atom, field).
void add_channel(TimeDependentHamiltonian& h, const qlin::Dims& dims, std::size_t atom,
                 std::size_t field, const DriveParams& channel) {
  if (channel.g == 0.0) return;
  const std::size_t nf = dims[field];
  const double half_g = 0.5 * channel.g;
  const double delta = channel.delta;
  h.terms.push_back({SparseOperator::local(dims, {{atom, sigma_x()}, {field, detail::annihilation(nf)}}),
                     [=](double t) { return half_g * std::polar(1.0, delta * t); }});
  h.terms.push_back({SparseOperator::local(dims, {{atom, sigma_x()}, {field, detail::creation(nf)}}),
                     [=](double t) { return half_g * std::polar(1.0, -delta * t); }});
}

double resolve_dt(const FockConfig& cfg, double fallback) { return cfg.dt > 0.0 ? cfg.dt : fallback; }

}  // namespace

qlin::StateVector initial_state(const InitialAtomState& init, std::size_t n_fields,
                                std::size_t n_fock) {
  qlin::StateVector psi = basis::atoms_energy(init);
  for (std::size_t k = 0; k < n_fields; ++k)
    psi = qlin::kron(psi, qlin::StateVector::basis(n_fock, 0, {n_fock}));
  return psi;
}

double default_dt(const DriveParams& params) {
  return dt_for(std::max(params.g, std::abs(params.delta)));
}

double default_dt(const DoubleDriveParams& params) {
  return dt_for(std::max({params.channel_a.g, std::abs(params.channel_a.delta), params.channel_b.g,
                          std::abs(params.channel_b.delta)}));
}

double default_dt(const LabFrameParams& p) {
  return dt_for(std::max({p.g, std::abs(p.detuning()), p.rabi, std::abs(p.omega_a),
                          std::abs(p.omega_b), std::abs(p.omega_f), std::abs(p.omega_d)}));
}

Trajectory evolve_effective_m1(const DriveParams& params, const qlin::StateVector& initial,
                               std::span<const double> times, const FockConfig& cfg) {
  check_config(cfg);
  validate(params);
  const qlin::Dims dims{2, 2, cfg.n_fock};
  check_initial(initial, dims);
  TimeDependentHamiltonian h;
  add_channel(h, dims, 0, 2, params);
  return propagate(h, initial, times, resolve_dt(cfg, default_dt(params)), cfg);
}

Trajectory evolve_effective_m1(const DriveParams& params, const InitialAtomState& init,
                               std::span<const double> times, const FockConfig& cfg) {
  return evolve_effective_m1(params, initial_state(init, 1, cfg.n_fock), times, cfg);
}

qlin::StateVector evolve_effective_m1(const DriveParams& params, const InitialAtomState& init,
                                      double t, const FockConfig& cfg) {
  const double times[] = {t};
  return evolve_effective_m1(params, init, times, cfg).states.front();
}

Trajectory evolve_effective_m2(const DoubleDriveParams& params, const qlin::StateVector& initial,
                               std::span<const double> times, const FockConfig& cfg) {
  check_config(cfg);
  validate(params);
  const qlin::Dims dims{2, 2, cfg.n_fock, cfg.n_fock};
  check_initial(initial, dims);
  TimeDependentHamiltonian h;
  add_channel(h, dims, 0, 2, params.channel_a);
  add_channel(h, dims, 1, 3, params.channel_b);
  return propagate(h, initial, times, resolve_dt(cfg, default_dt(params)), cfg);
}

Trajectory evolve_effective_m2(const DoubleDriveParams& params, const InitialAtomState& init,
                               std::span<const double> times, const FockConfig& cfg) {
  return evolve_effective_m2(params, initial_state(init, 2, cfg.n_fock), times, cfg);
}

qlin::StateVector evolve_effective_m2(const DoubleDriveParams& params,
                                      const InitialAtomState& init, double t,
                                      const FockConfig& cfg) {
  const double times[] = {t};
  return evolve_effective_m2(params, init, times, cfg).states.front();
}

Trajectory evolve_lab_frame(const LabFrameParams& p, const InitialAtomState& init,
                            std::span<const double> times, const FockConfig& cfg) {
  check_config(cfg);
  if (p.rabi < 0.0 || p.g < 0.0) throw ContractError("rabi and g must be non-negative");
  if (std::abs(p.omega_a - p.omega_d) > 1e-12 * std::max(1.0, std::abs(p.omega_a)))
    throw ContractError("lab-frame validation requires omega_a == omega_d");
  const double dt = resolve_dt(cfg, default_dt(p));
  if (p.rabi * dt > 0.05)
    throw StepSizeError("rabi * dt = " + num(p.rabi * dt) + " is too coarse for the drive",
                        p.rabi * dt);

  const qlin::Dims dims{2, 2, cfg.n_fock};
  const std::size_t nf = cfg.n_fock;
  auto constant = [](double v) { return [v](double) { return complex{v}; }; };
  TimeDependentHamiltonian h;
  h.terms.push_back({SparseOperator::local(dims, {{0, sigma_z()}}), constant(0.5 * p.omega_a)});
  h.terms.push_back({SparseOperator::local(dims, {{1, sigma_z()}}), constant(0.5 * p.omega_b)});
  h.terms.push_back({SparseOperator::local(dims, {{2, detail::number(nf)}}), constant(p.omega_f)});
  if (p.rabi != 0.0) {
    const double rabi = p.rabi, wd = p.omega_d;
    h.terms.push_back({SparseOperator::local(dims, {{0, sigma_plus()}}),
                       [=](double t) { return rabi * std::polar(1.0, -wd * t); }});
    h.terms.push_back({SparseOperator::local(dims, {{0, sigma_minus()}}),
                       [=](double t) { return rabi * std::polar(1.0, wd * t); }});
  }
  if (p.g != 0.0) {
    h.terms.push_back(
        {SparseOperator::local(dims, {{0, sigma_plus()}, {2, detail::annihilation(nf)}}), constant(p.g)});
    h.terms.push_back(
        {SparseOperator::local(dims, {{0, sigma_minus()}, {2, detail::creation(nf)}}), constant(p.g)});
  }
  return propagate(h, initial_state(init, 1, nf), times, dt, cfg);
}

qlin::StateVector evolve_lab_frame(const LabFrameParams& params, const InitialAtomState& init,
                                   double t, const FockConfig& cfg) {
  const double times[] = {t};
  return evolve_lab_frame(params, init, times, cfg).states.front();
}

ComplexMatrix lab_to_effective_frame(const ComplexMatrix& rho_ab, const LabFrameParams& p,
                                     double t) {
  // exp(i x sz) and exp(i x sx) in the energy basis.
  auto exp_iz = [](double x) {
    return ComplexMatrix::from_rows({{std::polar(1.0, x), 0.0}, {0.0, std::polar(1.0, -x)}});
  };
  auto exp_ix = [](double x) {
    return ComplexMatrix::from_rows({{std::cos(x), complex{0.0, std::sin(x)}},
                                     {complex{0.0, std::sin(x)}, std::cos(x)}});
  };
  const ComplexMatrix ra = exp_ix(p.rabi * t) * exp_iz(0.5 * p.omega_a * t);
  const ComplexMatrix rb = exp_iz(0.5 * p.omega_b * t);
  const ComplexMatrix r = qlin::kron(ra, rb);
  ComplexMatrix out = r * rho_ab * r.adjoint();
  out.set_subsystem_dims({2, 2});
  return out;
}

ComplexMatrix reduce(const qlin::StateVector& state, std::span<const std::size_t> keep) {
  return qlin::reduced_density_matrix(state, keep);
}

ComplexMatrix reduce(const qlin::StateVector& state, std::initializer_list<std::size_t> keep) {
  return reduce(state, std::span<const std::size_t>(keep.begin(), keep.size()));
}

double fock_leak(const qlin::StateVector& state) {
  double leak = 0.0;
  for (std::size_t i : leak_indices(state.subsystem_dims())) leak += std::norm(state[i]);
  return leak;
}

double mean_photon_number(const qlin::StateVector& state, std::size_t field) {
  const std::size_t keep[] = {field};
  const ComplexMatrix rho = reduce(state, keep);
  double n = 0.0;
  for (std::size_t k = 0; k < rho.dim(); ++k) n += static_cast<double>(k) * rho(k, k).real();
  return n;
}

}  // namespace esdlab::fock
