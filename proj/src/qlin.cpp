#include "esdlab/qlin.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace esdlab::qlin {

namespace {

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_dims(std::size_t dim, const Dims& dims) {
  if (dims.empty()) return;
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end() || product(dims) != dim) {
    throw StructureError("subsystem dimensions do not multiply to the matrix dimension");
  }
}

Dims factors_of(std::size_t dim, const Dims& dims) {
  return dims.empty() ? Dims{dim} : dims;
}

Dims concat(const Dims& a, std::size_t da, const Dims& b, std::size_t db) {
  Dims out = factors_of(da, a);
  const Dims rhs = factors_of(db, b);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// Row-major strides of a tensor-product index.
Dims strides_of(const Dims& dims) {
  Dims strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

struct SplitIndex {
  Dims kept_dims;
  std::vector<std::size_t> kept_offsets;    // full-index contribution of each kept multi-index
  std::vector<std::size_t> traced_offsets;  // same for the traced factors
};

// Enumerates full-index offsets for a subset of factors, in row-major order
// over that subset.
std::vector<std::size_t> offsets_for(const Dims& dims, const Dims& strides,
                                     const std::vector<std::size_t>& which) {
  std::vector<std::size_t> out{0};
  for (std::size_t k : which) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (std::size_t base : out)
      for (std::size_t d = 0; d < dims[k]; ++d) next.push_back(base + d * strides[k]);
    out = std::move(next);
  }
  return out;
}

SplitIndex split(const Dims& dims, std::span<const std::size_t> keep) {
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw StructureError("duplicate subsystem index in keep set");
  if (!kept.empty() && kept.back() >= dims.size())
    throw StructureError("subsystem index " + std::to_string(kept.back()) + " out of range");
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) traced.push_back(k);

  const Dims strides = strides_of(dims);
  SplitIndex s;
  for (std::size_t k : kept) s.kept_dims.push_back(dims[k]);
  s.kept_offsets = offsets_for(dims, strides, kept);
  s.traced_offsets = offsets_for(dims, strides, traced);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim, Dims subsystem_dims)
    : dim_(dim), dims_(std::move(subsystem_dims)), data_(dim * dim) {
  check_dims(dim_, dims_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim, Dims subsystem_dims) {
  ComplexMatrix m(dim, std::move(subsystem_dims));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const complex> diag, Dims subsystem_dims) {
  ComplexMatrix m(diag.size(), std::move(subsystem_dims));
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<complex>> rows,
                                       Dims subsystem_dims) {
  ComplexMatrix m(rows.size(), std::move(subsystem_dims));
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw StructureError("from_rows: matrix must be square");
    std::size_t c = 0;
    for (const complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::projector(const StateVector& psi) {
  ComplexMatrix m(psi.dim(), psi.subsystem_dims());
  for (std::size_t r = 0; r < psi.dim(); ++r)
    for (std::size_t c = 0; c < psi.dim(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  return m;
}

void ComplexMatrix::set_subsystem_dims(Dims dims) {
  check_dims(dim_, dims);
  dims_ = std::move(dims);
}

complex ComplexMatrix::trace() const {
  complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_, dims_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_, dims_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermitian_deviation() const {
  double dev = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermitian_deviation() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw StructureError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw StructureError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex s) {
  for (complex& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw StructureError("matrix dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n, a.subsystem_dims());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const complex aik = a(i, k);
      if (aik == complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::size_t dim, Dims subsystem_dims)
    : amps_(dim), dims_(std::move(subsystem_dims)) {
  check_dims(dim, dims_);
}

StateVector::StateVector(std::vector<complex> amplitudes, Dims subsystem_dims)
    : amps_(std::move(amplitudes)), dims_(std::move(subsystem_dims)) {
  check_dims(amps_.size(), dims_);
}

StateVector StateVector::basis(std::size_t dim, std::size_t index, Dims subsystem_dims) {
  StateVector v(dim, std::move(subsystem_dims));
  v[index] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector& StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ContractError("cannot normalize the zero vector");
  return *this *= 1.0 / n;
}

StateVector& StateVector::operator*=(complex s) {
  for (complex& a : amps_) a *= s;
  return *this;
}

complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw StructureError("vector dimension mismatch");
  complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw StructureError("matrix/vector dimension mismatch");
  StateVector out(v.dim(), v.subsystem_dims());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    complex s = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensor structure

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb, concat(a.subsystem_dims(), na, b.subsystem_dims(), nb));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k) amps[i * b.dim() + k] = a[i] * b[k];
  return StateVector(std::move(amps), concat(a.subsystem_dims(), a.dim(), b.subsystem_dims(), b.dim()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> keep) {
  if (rho.subsystem_dims().empty())
    throw StructureError("partial_trace requires subsystem dimensions");
  const SplitIndex s = split(rho.subsystem_dims(), keep);
  const std::size_t n = s.kept_offsets.size();
  ComplexMatrix out(n, s.kept_dims);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      complex acc = 0.0;
      for (std::size_t t : s.traced_offsets)
        acc += rho(s.kept_offsets[r] + t, s.kept_offsets[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix reduced_density_matrix(const StateVector& psi, std::span<const std::size_t> keep) {
  if (psi.subsystem_dims().empty())
    throw StructureError("reduced_density_matrix requires subsystem dimensions");
  const SplitIndex s = split(psi.subsystem_dims(), keep);
  const std::size_t n = s.kept_offsets.size();
  ComplexMatrix out(n, s.kept_dims);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      complex acc = 0.0;
      for (std::size_t t : s.traced_offsets)
        acc += psi[s.kept_offsets[r] + t] * std::conj(psi[s.kept_offsets[c] + t]);
      out(r, c) = acc;
      out(c, r) = std::conj(acc);
    }
  for (std::size_t r = 0; r < n; ++r) out(r, r) = out(r, r).real();
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t subsystem) {
  const Dims& dims = rho.subsystem_dims();
  if (dims.empty()) throw StructureError("partial_transpose requires subsystem dimensions");
  if (subsystem >= dims.size())
    throw StructureError("subsystem index " + std::to_string(subsystem) + " out of range");
  const std::size_t stride = strides_of(dims)[subsystem];
  const std::size_t d = dims[subsystem];
  const std::size_t n = rho.dim();
  ComplexMatrix out(n, dims);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t dr = (r / stride) % d;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t dc = (c / stride) % d;
      out(r - dr * stride + dc * stride, c - dc * stride + dr * stride) = rho(r, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigenproblem: cyclic Jacobi with complex rotations.

namespace {

EigenSystem jacobi(const ComplexMatrix& m, bool want_vectors) {
  const std::size_t n = m.dim();
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermitian_deviation() > kHermitianTol * scale)
    throw ContractError("herm_eigenvalues: matrix is not Hermitian within tolerance");

  ComplexMatrix a = m;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};

  double frob = 0.0;
  for (const complex& x : a.data()) frob += std::norm(x);
  const double target = 1e-14 * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(a(r, c));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase-rotate column q so the pivot is real, then a real Givens rotation.
        const complex phase = std::conj(apq) / r;  // e^{-i arg(apq)}
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;
        // G = diag(1, phase) * [[cs, sn], [-sn, cs]]
        const complex g00 = cs, g01 = sn, g10 = -sn * phase, g11 = cs * phase;

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g00 + akq * g10;
          a(k, q) = akp * g01 + akq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^dagger A
          const complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
          a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const complex vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * g00 + vkq * g10;
            v(k, q) = vkp * g01 + vkq * g11;
          }
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem out;
  out.values.reserve(n);
  for (std::size_t i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

}  // namespace

std::vector<double> herm_eigenvalues(const ComplexMatrix& m) { return jacobi(m, false).values; }

EigenSystem herm_eigensystem(const ComplexMatrix& m) { return jacobi(m, true); }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw StructureError("trace_distance: dimension mismatch");
  double s = 0.0;
  for (double ev : herm_eigenvalues(a - b)) s += std::abs(ev);
  return 0.5 * s;
}

double purity(const ComplexMatrix& rho) {
  double s = 0.0;
  for (const complex& x : rho.data()) s += std::norm(x);  // Tr(rho^2) for Hermitian rho
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw StructureError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace esdlab::qlin
