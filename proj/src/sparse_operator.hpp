#pragma once

// CSR operators assembled from local factors, for the Fock-space propagator.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "esdlab/qlin.hpp"

namespace esdlab::detail {

class SparseOperator {
 public:
  /// Tensor product over `dims` with the given dense operators on the listed
  /// factors and identity elsewhere.
  static SparseOperator local(const qlin::Dims& dims,
                              const std::vector<std::pair<std::size_t, qlin::ComplexMatrix>>& factors);

  std::size_t dim() const noexcept { return row_ptr_.empty() ? 0 : row_ptr_.size() - 1; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  /// out += coeff * (this * in)
  void apply_add(qlin::complex coeff, std::span<const qlin::complex> in,
                 std::span<qlin::complex> out) const;

 private:
  std::vector<std::size_t> row_ptr_;
  std::vector<std::size_t> cols_;
  std::vector<qlin::complex> values_;
};

/// H(t) = sum_k c_k(t) O_k
struct TimeDependentHamiltonian {
  struct Term {
    SparseOperator op;
    std::function<qlin::complex(double)> coefficient;
  };
  std::vector<Term> terms;

  /// out = -i H(t) in
  void derivative(double t, std::span<const qlin::complex> in, std::span<qlin::complex> out) const;
};

// Single-mode operators on n Fock levels.
qlin::ComplexMatrix annihilation(std::size_t n);
qlin::ComplexMatrix creation(std::size_t n);
qlin::ComplexMatrix number(std::size_t n);

}  // namespace esdlab::detail
