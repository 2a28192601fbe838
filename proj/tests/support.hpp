#pragma once

// Test-side oracles. Nothing here calls into the library's linear algebra:
// spectra come from Eigen, partial transposes and traces are re-derived from
// index formulas, and reference density matrices are assembled from
// coherent-state overlaps.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "esdlab/qlin.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat to_eigen(const esdlab::qlin::ComplexMatrix& m) {
  Mat out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

inline esdlab::qlin::ComplexMatrix from_eigen(const Mat& m, esdlab::qlin::Dims dims = {}) {
  esdlab::qlin::ComplexMatrix out(static_cast<std::size_t>(m.rows()), std::move(dims));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

inline std::vector<double> eigenvalues(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

inline double lambda_min(const Mat& m) { return eigenvalues(m).front(); }

/// Partial transpose on a d1 x d2 bipartition, subsystem 0 or 1.
inline Mat partial_transpose(const Mat& rho, int d1, int d2, int sub) {
  Mat out(rho.rows(), rho.cols());
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) {
          const int r = i * d2 + k, c = j * d2 + l;
          if (sub == 0)
            out(j * d2 + k, i * d2 + l) = rho(r, c);
          else
            out(i * d2 + l, j * d2 + k) = rho(r, c);
        }
  return out;
}

inline double negativity(const Mat& rho, int d1, int d2) {
  const double lm = lambda_min(partial_transpose(rho, d1, d2, 0));
  return lm < -1e-13 ? -2.0 * lm : 0.0;
}

inline double trace_distance(const Mat& a, const Mat& b) {
  double s = 0.0;
  for (double v : eigenvalues(a - b)) s += std::abs(v);
  return 0.5 * s;
}

/// Trace over subsystem `drop` of a d1 x d2 matrix.
inline Mat trace_out(const Mat& rho, int d1, int d2, int drop) {
  const int keep_dim = drop == 0 ? d2 : d1;
  Mat out = Mat::Zero(keep_dim, keep_dim);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k)
      for (int j = 0; j < d1; ++j)
        for (int l = 0; l < d2; ++l) {
          if (drop == 0 && i == j) out(k, l) += rho(i * d2 + k, j * d2 + l);
          if (drop == 1 && k == l) out(i, j) += rho(i * d2 + k, j * d2 + l);
        }
  return out;
}

/// Squared concurrence of the pair left after tracing the last qubit of a
/// pure three-qubit state. The two conditional vectors v_c = <c|psi> are a
/// Wootters ensemble, so with T_ij = v_i^T (sy x sy) v_j the concurrence is
/// the singular-value gap of T: C^2 = |T|_F^2 - 2 |det T|, free of square roots.
inline double pure_pair_concurrence_sq(const Vec& psi) {
  // (sy x sy) maps (v00, v01, v10, v11) to (-v11, v10, v01, -v00)
  auto tilde = [](const Vec& a, const Vec& b) {
    return -a(0) * b(3) + a(1) * b(2) + a(2) * b(1) - a(3) * b(0);
  };
  Vec v[2] = {Vec(4), Vec(4)};
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 4; ++i) v[c](i) = psi(2 * i + c);
  const cd t00 = tilde(v[0], v[0]), t01 = tilde(v[0], v[1]), t11 = tilde(v[1], v[1]);
  const double frob = std::norm(t00) + 2 * std::norm(t01) + std::norm(t11);
  return frob - 2 * std::abs(t00 * t11 - t01 * t01);
}

/// Residual tangle C^2_{A(BC)} - C^2_{AB} - C^2_{AC} of a pure three-qubit state.
inline double ckw_tangle(const Vec& psi) {
  const Mat rho = psi * psi.adjoint();
  const Mat rho_a = trace_out(rho, 2, 4, 1);
  const double c_a_bc_sq = 4.0 * std::abs(rho_a.determinant());
  // AC pair: swap B and C, then drop the last qubit.
  Vec swapped(8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) swapped(4 * a + 2 * c + b) = psi(4 * a + 2 * b + c);
  return c_a_bc_sq - pure_pair_concurrence_sq(psi) - pure_pair_concurrence_sq(swapped);
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed = 20240611) : gen(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
  cd cnormal() { return {normal(), normal()}; }

  Mat ginibre(int n) {
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = cnormal();
    return m;
  }
  /// Orthonormalized complex Gaussian columns.
  Mat unitary(int n) { return ginibre(n).householderQr().householderQ(); }
  Mat hermitian(int n) {
    const Mat g = ginibre(n);
    return 0.5 * (g + g.adjoint());
  }
  /// Random full-rank unit-trace PSD matrix.
  Mat density(int n) {
    const Mat g = ginibre(n);
    Mat rho = g * g.adjoint();
    return rho / rho.trace();
  }
  Vec state(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cnormal();
    return v.normalized();
  }
};

/// <beta|gamma> for coherent states, summed in a truncated number basis.
inline cd coherent_overlap(cd beta, cd gamma, int levels = 120) {
  cd sum = 0.0, term_b = 1.0, term_g = 1.0;
  for (int n = 0; n < levels; ++n) {
    if (n > 0) {
      term_b *= std::conj(beta) / std::sqrt(static_cast<double>(n));
      term_g *= gamma / std::sqrt(static_cast<double>(n));
    }
    sum += term_b * term_g;
  }
  return std::exp(-0.5 * (std::norm(beta) + std::norm(gamma))) * sum;
}

/// Bell-like atomic amplitudes in the rotated basis (|++>, |+->, |-+>, |-->),
/// derived from |e> = (|+> - |->)/sqrt2, |g> = (|+> + |->)/sqrt2.
inline Vec rotated_bell(bool phi_family, double theta) {
  const double h = 1.0 / std::sqrt(2.0);
  Vec e(2), g(2);
  e << h, -h;
  g << h, h;
  auto kron = [](const Vec& a, const Vec& b) {
    Vec out(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out(2 * i + j) = a(i) * b(j);
    return out;
  };
  const double c = std::cos(theta), s = std::sin(theta);
  return phi_family ? Vec(c * kron(e, e) + s * kron(g, g)) : Vec(c * kron(e, g) + s * kron(g, e));
}

/// rho_AB when |+_A> drives the field to |alpha>, |-_A> to |-alpha>, and
/// optionally B's rotated states drive a second field to -/+ beta.
inline Mat displaced_rho_ab(const Vec& amps, cd alpha, cd beta = 0.0) {
  auto field_a = [&](int a) { return a == 0 ? alpha : -alpha; };
  auto field_b = [&](int b) { return b == 0 ? -beta : beta; };
  Mat rho(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const cd ov_a = coherent_overlap(field_a(c / 2), field_a(r / 2));
      const cd ov_b = coherent_overlap(field_b(c % 2), field_b(r % 2));
      rho(r, c) = amps(r) * std::conj(amps(c)) * ov_a * ov_b;
    }
  return rho;
}

/// Field amplitude of the conditional displacement (any sign convention
/// gives the same rho_AB).
inline cd alpha(double g, double delta, double t) {
  if (delta == 0.0) return cd(0.0, -0.5 * g * t);
  return (g / (2.0 * delta)) * (1.0 - std::exp(cd(0.0, delta * t)));
}

}  // namespace oracle
