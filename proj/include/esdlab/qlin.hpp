#pragma once

// Dense complex linear algebra for the small Hilbert spaces used by esdlab.
//
// Matrices are row-major and value-semantic. Tensor factors are tracked by an
// optional list of subsystem dimensions; index 0 is the leftmost factor, so
// for the atom/cavity systems here the order is (A, B, a[, b]).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "esdlab/errors.hpp"

namespace esdlab::qlin {

using complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

/// Elementwise tolerance on |M - M^dagger| for a matrix treated as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

class StateVector;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim, Dims subsystem_dims = {});

  static ComplexMatrix identity(std::size_t dim, Dims subsystem_dims = {});
  static ComplexMatrix diagonal(std::span<const complex> diag, Dims subsystem_dims = {});
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<complex>> rows,
                                 Dims subsystem_dims = {});
  /// |psi><psi|, inheriting the vector's subsystem structure.
  static ComplexMatrix projector(const StateVector& psi);

  std::size_t dim() const noexcept { return dim_; }
  const Dims& subsystem_dims() const noexcept { return dims_; }
  void set_subsystem_dims(Dims dims);

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<complex> data() noexcept { return data_; }
  std::span<const complex> data() const noexcept { return data_; }

  complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double max_abs() const;
  /// max |M - M^dagger| over all entries.
  double hermitian_deviation() const;
  bool is_hermitian(double tol = kHermitianTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  Dims dims_;
  std::vector<complex> data_;
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim, Dims subsystem_dims = {});
  StateVector(std::vector<complex> amplitudes, Dims subsystem_dims);

  /// Computational basis vector |index>.
  static StateVector basis(std::size_t dim, std::size_t index, Dims subsystem_dims = {});

  std::size_t dim() const noexcept { return amps_.size(); }
  const Dims& subsystem_dims() const noexcept { return dims_; }

  complex& operator[](std::size_t i) { return amps_[i]; }
  const complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<complex> amplitudes() noexcept { return amps_; }
  std::span<const complex> amplitudes() const noexcept { return amps_; }

  double norm() const;
  StateVector& normalize();
  StateVector& operator*=(complex s);

 private:
  std::vector<complex> amps_;
  Dims dims_;
};

complex inner(const StateVector& a, const StateVector& b);  // <a|b>
StateVector operator*(const ComplexMatrix& m, const StateVector& v);

/// Kronecker product; subsystem lists are concatenated (a bare operand counts
/// as a single factor of its full dimension).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector kron(const StateVector& a, const StateVector& b);

/// Reduced matrix over the kept subsystems, in their original order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::initializer_list<std::size_t> keep);

/// Reduced density matrix of |psi><psi| without materializing the projector.
ComplexMatrix reduced_density_matrix(const StateVector& psi, std::span<const std::size_t> keep);

/// Transpose applied to one tensor factor only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t subsystem);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Ascending eigenvalues of a Hermitian matrix (cyclic complex Jacobi).
/// Throws ContractError if |M - M^dagger| exceeds kHermitianTol * max(1, max|M|).
std::vector<double> herm_eigenvalues(const ComplexMatrix& m);
EigenSystem herm_eigensystem(const ComplexMatrix& m);

/// (1/2) sum |eig(a - b)|.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double purity(const ComplexMatrix& rho);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace esdlab::qlin
