#include <doctest.h>

#include <numbers>

#include "esdlab/esd.hpp"
#include "esdlab/model1.hpp"

using namespace esdlab;
using std::numbers::pi;

namespace {

const InitialAtomState kBell{Family::Psi, pi / 4, 0.0};

esd::SampledCurve curve(const DriveParams& p, double periods, std::size_t per_period) {
  const double T = model1::period(p);
  return esd::sample_negativity(p, kBell, periods * T,
                                static_cast<std::size_t>(periods * per_period) + 1);
}

void check_intervals(const esd::EsdReport& r, double t0, double t1) {
  for (std::size_t i = 0; i < r.death_intervals.size(); ++i) {
    CHECK(r.death_intervals[i].start <= r.death_intervals[i].end);
    CHECK(r.death_intervals[i].start >= t0);
    CHECK(r.death_intervals[i].end <= t1);
    if (i > 0) CHECK(r.death_intervals[i - 1].end < r.death_intervals[i].start);
  }
}

}  // namespace

TEST_SUITE("esd") {

TEST_CASE("constant curve") {
  esd::SampledCurve c;
  for (int i = 0; i < 200; ++i) {
    c.times.push_back(i * 0.1);
    c.values.push_back(0.5);
  }
  const auto r = esd::detect_esd(c);
  CHECK(r.death_intervals.empty());
  CHECK(r.classification == esd::Regime::BoundedOscillation);
  CHECK(r.min_negativity == 0.5);
  CHECK(r.epsilon == 1e-3);
}

TEST_CASE("g/delta = 2 dies around delta t = pi") {
  const DriveParams p{1.0, 0.5};
  const auto r = esd::detect_esd(curve(p, 2.0, 400));
  CHECK(r.classification == esd::Regime::ESD);
  REQUIRE(r.death_intervals.size() == 2);
  check_intervals(r, 0.0, 8 * pi);
  const double mid = 0.5 * (r.death_intervals[0].start + r.death_intervals[0].end);
  CHECK(std::abs(mid - 2 * pi) <= 1e-8);
  CHECK(std::abs(r.min_negativity - std::exp(-8.0)) <= 1e-9);
  CHECK(std::abs(r.argmin_t - 2 * pi) <= 1e-4);
  // The crossing solves P(t) = epsilon: cos(delta t) = 1 + ln(eps) / r^2
  const double tc = std::acos(1.0 + std::log(1e-3) / 4.0) / 0.5;
  CHECK(std::abs(r.death_intervals[0].start - tc) <= 1e-9 * 8 * pi);

  esd::Thresholds tight;
  tight.epsilon = 1e-5;
  const auto r2 = esd::detect_esd(curve(p, 2.0, 400), tight);
  CHECK(r2.death_intervals.empty());
  CHECK(r2.classification == esd::Regime::BoundedOscillation);
}

TEST_CASE("g/delta = 0.5 never dies") {
  const auto r = esd::detect_esd(curve({1.0, 2.0}, 2.0, 400));
  CHECK(r.death_intervals.empty());
  CHECK(std::abs(r.min_negativity - std::exp(-0.5)) <= 1e-9);
  CHECK(r.classification == esd::Regime::BoundedOscillation);
}

TEST_CASE("min negativity equals e^{-2 (g/delta)^2}") {
  for (double ratio : {0.3, 0.7, 1.0, 1.5, 2.0, 2.5}) {
    const auto r = esd::detect_esd(curve({1.0, 1.0 / ratio}, 1.0, 400));
    CHECK(std::abs(r.min_negativity - std::exp(-2 * ratio * ratio)) <= 1e-9);
  }
}

TEST_CASE("resonance is an eraser") {
  const DriveParams p{1.0, 0.0};
  const auto r = esd::detect_esd(esd::sample_negativity(p, kBell, 6.0, 601));
  CHECK(r.classification == esd::Regime::Eraser);
  REQUIRE(r.death_intervals.size() == 1);
  CHECK(std::abs(r.death_intervals[0].start - std::sqrt(2 * std::log(1000.0))) <= 1e-8);
  CHECK(r.death_intervals[0].end == 6.0);
}

TEST_CASE("large detuning is preserved") {
  const auto r = esd::detect_esd(curve({1.0, 10.0}, 2.0, 400));
  CHECK(r.classification == esd::Regime::Preserved);
  CHECK(std::abs(r.min_negativity - std::exp(-0.02)) <= 1e-9);
}

TEST_CASE("narrow dip between samples is still found") {
  // epsilon just above e^{-8}: N < epsilon only for |delta t - pi| < 0.3, and
  // the nearest of 4 samples over one period sits about 1 rad away
  esd::Thresholds th;
  th.epsilon = 4e-4;
  const auto c = esd::sample_negativity(DriveParams{1.0, 0.5}, kBell, 4 * pi, 4);
  for (double v : c.values) REQUIRE(v >= th.epsilon);
  const auto r = esd::detect_esd(c, th);
  CHECK(r.classification == esd::Regime::ESD);
  REQUIRE(r.death_intervals.size() == 1);
  const double half = 2.0 * std::acos(1.0 + std::log(4e-4) / 4.0);  // crossing time
  CHECK(std::abs(r.death_intervals[0].start - half) <= 1e-8);
  CHECK(std::abs(r.death_intervals[0].end - (4 * pi - half)) <= 1e-8);
}

TEST_CASE("refinement stability under grid doubling") {
  const DriveParams p{1.0, 0.4};
  const auto coarse = esd::detect_esd(curve(p, 2.0, 150));
  const auto fine = esd::detect_esd(curve(p, 2.0, 300));
  CHECK(coarse.classification == fine.classification);
  REQUIRE(coarse.death_intervals.size() == fine.death_intervals.size());
  const double window = 2 * model1::period(p);
  for (std::size_t i = 0; i < coarse.death_intervals.size(); ++i) {
    CHECK(std::abs(coarse.death_intervals[i].start - fine.death_intervals[i].start) <= 1e-9 * window);
    CHECK(std::abs(coarse.death_intervals[i].end - fine.death_intervals[i].end) <= 1e-9 * window);
  }
}

TEST_CASE("interpolated crossings move by at most one coarse cell") {
  const DriveParams p{1.0, 0.4};
  auto a = curve(p, 2.0, 150), b = curve(p, 2.0, 300);
  a.evaluate = nullptr;
  b.evaluate = nullptr;
  const auto ra = esd::detect_esd(a), rb = esd::detect_esd(b);
  const double cell = a.times[1] - a.times[0];
  REQUIRE(ra.death_intervals.size() == rb.death_intervals.size());
  for (std::size_t i = 0; i < ra.death_intervals.size(); ++i) {
    CHECK(std::abs(ra.death_intervals[i].start - rb.death_intervals[i].start) <= cell);
    CHECK(std::abs(ra.death_intervals[i].end - rb.death_intervals[i].end) <= cell);
  }
}

TEST_CASE("a 1e-15 floor changes nothing") {
  const DriveParams p{1.0, 0.5};
  const auto base = curve(p, 2.0, 400);
  auto lifted = base;
  for (double& v : lifted.values) v += 1e-15;
  const auto f = base.evaluate;
  lifted.evaluate = [f](double t) { return f(t) + 1e-15; };
  const auto r0 = esd::detect_esd(base), r1 = esd::detect_esd(lifted);
  CHECK(r0.classification == r1.classification);
  REQUIRE(r0.death_intervals.size() == r1.death_intervals.size());
  for (std::size_t i = 0; i < r0.death_intervals.size(); ++i) {
    CHECK(std::abs(r0.death_intervals[i].start - r1.death_intervals[i].start) <= 1e-9 * 8 * pi);
    CHECK(std::abs(r0.death_intervals[i].end - r1.death_intervals[i].end) <= 1e-9 * 8 * pi);
  }
}

TEST_CASE("contracts") {
  CHECK_THROWS_AS(esd::detect_esd({}), ContractError);
  esd::SampledCurve c{{0.0, 1.0}, {1.0, 1.0}, {}};
  esd::Thresholds bad;
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(esd::detect_esd(c, bad), ContractError);
  CHECK_THROWS_AS(esd::sample_negativity(DriveParams{}, kBell, 1.0, 1), ContractError);
}

TEST_CASE("periods and windows") {
  CHECK(*esd::model_period(DriveParams{1.0, 0.5}) == doctest::Approx(4 * pi));
  CHECK_FALSE(esd::model_period(DriveParams{1.0, 0.0}).has_value());
  CHECK(*esd::model_period(DoubleDriveParams{{1.0, 0.5}, {1.0, 2.0}}) == doctest::Approx(4 * pi));
  CHECK(esd::scan_window(DriveParams{1.0, 0.5}, 2.0, 99.0) == doctest::Approx(8 * pi));
  CHECK(esd::scan_window(DriveParams{1.0, 0.0}, 2.0, 99.0) == 99.0);
}

TEST_CASE("Model 2 curves dispatch through the same engine") {
  const DoubleDriveParams p{{1.0, 0.5}, {1.0, 0.5}};
  const auto r = esd::detect_esd(esd::sample_negativity(p, kBell, 4 * pi, 801));
  CHECK(r.classification == esd::Regime::ESD);
  CHECK(std::abs(r.min_negativity - std::exp(-16.0)) <= 1e-9);
}

}  // TEST_SUITE
