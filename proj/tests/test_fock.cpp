#include <doctest.h>

#include <numbers>

#include "esdlab/basis.hpp"
#include "esdlab/fock_oracle.hpp"
#include "esdlab/model1.hpp"
#include "esdlab/model2.hpp"
#include "support.hpp"

using namespace esdlab;
using std::numbers::pi;

namespace {

double mismatch_m1(const DriveParams& p, const InitialAtomState& init, double t,
                   const fock::FockConfig& cfg) {
  const auto psi = fock::evolve_effective_m1(p, init, t, cfg);
  return qlin::trace_distance(fock::reduce(psi, {0, 1}),
                              basis::atoms_rotated_to_energy(model1::rho_ab(p, init, t)));
}

// A in |+>, B in |g>, field in vacuum.
qlin::StateVector plus_state(std::size_t n) {
  qlin::StateVector psi(4 * n, {2, 2, n});
  const double h = 1.0 / std::sqrt(2.0);
  psi[(basis::kExcited * 2 + basis::kGround) * n] = h;
  psi[(basis::kGround * 2 + basis::kGround) * n] = h;
  return psi;
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("initial state") {
  const auto psi = fock::initial_state({Family::Psi, pi / 6, 0.0}, 1, 5);
  CHECK(psi.subsystem_dims() == qlin::Dims{2, 2, 5});
  CHECK(std::abs(psi[(0 * 2 + 1) * 5] - std::cos(pi / 6)) <= 1e-15);
  CHECK(std::abs(psi[(1 * 2 + 0) * 5] - std::sin(pi / 6)) <= 1e-15);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-15);
  const auto psi2 = fock::initial_state({Family::Phi, 0.3, 0.5}, 2, 3);
  CHECK(psi2.subsystem_dims() == qlin::Dims{2, 2, 3, 3});
  CHECK(std::abs(psi2[3 * 9] - std::sin(0.3) * std::polar(1.0, 0.5)) <= 1e-15);
}

TEST_CASE("g = 0 leaves the state constant") {
  const InitialAtomState init{Family::Psi, pi / 5, 0.0};
  const auto psi0 = fock::initial_state(init, 1, 10);
  fock::FockConfig cfg;
  cfg.n_fock = 10;
  const auto psi = fock::evolve_effective_m1({0.0, 0.5}, init, 7.0, cfg);
  double diff = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) diff = std::max(diff, std::abs(psi[i] - psi0[i]));
  CHECK(diff <= 1e-14);
  const auto psi2 = fock::evolve_effective_m2({{0.0, 0.5}, {0.0, 2.0}}, init, 3.0, cfg);
  CHECK(std::abs(psi2.norm() - 1.0) <= 1e-14);
  CHECK(fock::mean_photon_number(psi2, 2) <= 1e-28);
}

TEST_CASE("coherent displacement: mean photon number") {
  const std::vector<double> times{2 * pi};
  const auto traj = fock::evolve_effective_m1({1.0, 0.5}, plus_state(40), times);
  CHECK(std::abs(fock::mean_photon_number(traj.states[0], 2) - 4.0) <= 1e-6);
  CHECK(traj.max_norm_drift <= 1e-9);
  CHECK(traj.max_leak <= 1e-10);
}

TEST_CASE("oracle matches the Model 1 closed form") {
  const DriveParams p{1.0, 0.5};
  const InitialAtomState init{Family::Psi, pi / 6, 0.0};
  std::vector<double> ts;
  for (int k = 0; k < 100; ++k) ts.push_back(4 * pi / 0.5 * k / 99.0);
  const auto traj = fock::evolve_effective_m1(p, init, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double d = qlin::trace_distance(
        fock::reduce(traj.states[i], {0, 1}),
        basis::atoms_rotated_to_energy(model1::rho_ab(p, init, ts[i])));
    CHECK(d <= 1e-6);
  }
  CHECK(traj.max_norm_drift <= 1e-9);
  CHECK(mismatch_m1(p, init, 1.0, {}) <= 1e-6);
}

TEST_CASE("phi != 0 is propagated and global phases do not matter") {
  const DriveParams p{1.0, 0.5};
  const InitialAtomState init{Family::Psi, pi / 6, 0.7};
  const auto psi = fock::evolve_effective_m1(p, init, 3.0);
  auto shifted = fock::initial_state(init, 1, 40);
  shifted *= std::polar(1.0, 1.234);
  const std::vector<double> t{3.0};
  const auto traj = fock::evolve_effective_m1(p, shifted, t);
  CHECK(qlin::max_abs_diff(fock::reduce(psi, {0, 1}), fock::reduce(traj.states[0], {0, 1})) <=
        1e-13);
  CHECK(qlin::max_abs_diff(fock::reduce(psi, {0, 2}), fock::reduce(traj.states[0], {0, 2})) <=
        1e-13);
}

TEST_CASE("field support is two-dimensional") {
  const auto psi = fock::evolve_effective_m1({1.0, 0.5}, {Family::Psi, pi / 6, 0.0}, 5.0);
  const auto ev = qlin::herm_eigenvalues(fock::reduce(psi, {2}));
  for (std::size_t i = 0; i + 2 < ev.size(); ++i) CHECK(std::abs(ev[i]) <= 1e-9);
}

TEST_CASE("RK4 convergence order") {
  const DriveParams p{1.0, 0.5};
  const InitialAtomState init{Family::Psi, pi / 6, 0.0};
  const double t = 3.0;
  double prev = 0.0;
  int ratios = 0;
  for (double dt : {0.2, 0.1, 0.05, 0.025}) {
    fock::FockConfig cfg;
    cfg.dt = dt;
    cfg.norm_tol = 1.0;  // measure the error, do not police it
    const double err = mismatch_m1(p, init, t, cfg);
    if (prev > 0.0 && err > 1e-12) {
      CHECK(prev / err >= 12.0);
      ++ratios;
    }
    prev = err;
  }
  CHECK(ratios >= 2);
}

TEST_CASE("more Fock levels never hurt") {
  const DriveParams p{1.0, 0.5};
  const InitialAtomState init{Family::Psi, pi / 4, 0.0};
  double prev = 1.0;
  for (std::size_t n : {8u, 12u, 16u, 24u, 40u}) {
    fock::FockConfig cfg;
    cfg.n_fock = n;
    cfg.leak_tol = 1.0;
    const double err = mismatch_m1(p, init, 2 * pi, cfg);
    CHECK(err <= prev + 1e-10);
    prev = err;
  }
  CHECK(prev <= 1e-6);
}

TEST_CASE("leak and step-size errors") {
  const DriveParams p{1.0, 0.5};
  const InitialAtomState init{Family::Psi, pi / 4, 0.0};
  fock::FockConfig small;
  small.n_fock = 4;
  CHECK_THROWS_AS(fock::evolve_effective_m1(p, init, 2 * pi, small), TruncationError);
  try {
    fock::evolve_effective_m1(p, init, 2 * pi, small);
  } catch (const TruncationError& e) {
    CHECK(e.leak() > small.leak_tol);
  }
  fock::FockConfig coarse;
  coarse.dt = 100 * fock::default_dt(p);
  CHECK_THROWS_AS(fock::evolve_effective_m1(p, init, 2 * pi, coarse), StepSizeError);
  const std::vector<double> bad{1.0, 0.5};
  CHECK_THROWS_AS(fock::evolve_effective_m1(p, init, bad), ContractError);
}

TEST_CASE("default step") {
  CHECK(fock::default_dt(DriveParams{1.0, 0.5}) == doctest::Approx(2 * pi / 4096));
  CHECK(fock::default_dt(DriveParams{1.0, 10.0}) == doctest::Approx(2 * pi / 10 / 4096));
  CHECK(fock::default_dt(DoubleDriveParams{{1.0, 0.5}, {1.0, 2.0}}) ==
        doctest::Approx(2 * pi / 2 / 4096));
}

TEST_CASE("Model 2 oracle") {
  const DoubleDriveParams p{{1.0, 0.5}, {1.0, 2.0}};
  const InitialAtomState init{Family::Psi, pi / 4, 0.0};
  fock::FockConfig cfg;
  cfg.n_fock = 26;  // |alpha|, |beta| <= 2
  cfg.leak_tol = 1e-9;
  const std::vector<double> ts{0.0, 1.0, 2.0, 2 * pi};
  const auto traj = fock::evolve_effective_m2(p, init, ts, cfg);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double d =
        qlin::trace_distance(fock::reduce(traj.states[i], {0, 1}),
                             basis::atoms_rotated_to_energy(model2::rho_ab(p, init, ts[i])));
    CHECK(d <= 1e-6);
  }
}

TEST_CASE("Model 2 with g_B = 0 reduces to Model 1") {
  const DoubleDriveParams p{{1.0, 0.5}, {0.0, 2.0}};
  const InitialAtomState init{Family::Psi, pi / 6, 0.0};
  fock::FockConfig cfg;
  cfg.n_fock = 24;
  const auto a = fock::evolve_effective_m2(p, init, 2.5, cfg);
  const auto b = fock::evolve_effective_m1(p.channel_a, init, 2.5, cfg);
  CHECK(qlin::max_abs_diff(fock::reduce(a, {0, 1, 2}), fock::reduce(b, {0, 1, 2})) <= 1e-9);
}

TEST_CASE("lab frame without drive or coupling is free precession") {
  fock::LabFrameParams lp;
  lp.omega_a = lp.omega_d = 0.8;
  lp.omega_b = 0.3;
  lp.rabi = 0.0;
  lp.g = 0.0;
  fock::FockConfig cfg;
  cfg.n_fock = 6;
  const InitialAtomState init{Family::Psi, pi / 6, 0.0};
  const auto psi0 = fock::initial_state(init, 1, 6);
  const auto psi = fock::evolve_lab_frame(lp, init, 4.0, cfg);
  for (std::size_t i = 0; i < psi.dim(); ++i) CHECK(std::abs(std::norm(psi[i]) - std::norm(psi0[i])) <= 1e-12);
}

TEST_CASE("lab frame approaches the effective model as the drive grows") {
  const InitialAtomState init{Family::Psi, pi / 4, 0.0};
  const DriveParams eff{1.0, 0.5};
  const double t = pi;  // gt = pi
  const auto rho_eff = basis::atoms_rotated_to_energy(model1::rho_ab(eff, init, t));
  double prev = 2.0;
  for (double rabi : {10.0, 30.0}) {
    fock::LabFrameParams lp;
    lp.rabi = rabi;
    lp.omega_f = 0.5;
    const auto psi = fock::evolve_lab_frame(lp, init, t);
    const double d = qlin::trace_distance(
        fock::lab_to_effective_frame(fock::reduce(psi, {0, 1}), lp, t), rho_eff);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 0.1);
}

TEST_CASE("lab frame contracts") {
  fock::LabFrameParams lp;
  lp.omega_a = 1.0;
  lp.omega_d = 0.0;
  CHECK_THROWS_AS(fock::evolve_lab_frame(lp, {}, 1.0), ContractError);
  fock::LabFrameParams fast;
  fock::FockConfig cfg;
  cfg.dt = 0.01;
  CHECK_THROWS_AS(fock::evolve_lab_frame(fast, {}, 1.0, cfg), StepSizeError);
}

}  // TEST_SUITE
