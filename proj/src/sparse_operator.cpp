#include "sparse_operator.hpp"

#include <algorithm>
#include <cmath>

namespace esdlab::detail {

SparseOperator SparseOperator::local(
    const qlin::Dims& dims,
    const std::vector<std::pair<std::size_t, qlin::ComplexMatrix>>& factors) {
  // Row-wise sparse kron, built left to right: entries[r] = {(c, v)}.
  std::vector<std::vector<std::pair<std::size_t, qlin::complex>>> rows{{{0, 1.0}}};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t d = dims[k];
    const auto it = std::find_if(factors.begin(), factors.end(),
                                 [k](const auto& f) { return f.first == k; });
    std::vector<std::vector<std::pair<std::size_t, qlin::complex>>> next(rows.size() * d);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t i = 0; i < d; ++i)
        for (const auto& [c, v] : rows[r]) {
          if (it == factors.end()) {
            next[r * d + i].emplace_back(c * d + i, v);
          } else {
            for (std::size_t j = 0; j < d; ++j) {
              const qlin::complex m = it->second(i, j);
              if (m != qlin::complex{}) next[r * d + i].emplace_back(c * d + j, v * m);
            }
          }
        }
    rows = std::move(next);
  }

  SparseOperator op;
  op.row_ptr_.reserve(rows.size() + 1);
  op.row_ptr_.push_back(0);
  for (const auto& row : rows) {
    for (const auto& [c, v] : row) {
      op.cols_.push_back(c);
      op.values_.push_back(v);
    }
    op.row_ptr_.push_back(op.cols_.size());
  }
  return op;
}

void SparseOperator::apply_add(qlin::complex coeff, std::span<const qlin::complex> in,
                               std::span<qlin::complex> out) const {
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r) {
    qlin::complex acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += values_[k] * in[cols_[k]];
    out[r] += coeff * acc;
  }
}

void TimeDependentHamiltonian::derivative(double t, std::span<const qlin::complex> in,
                                          std::span<qlin::complex> out) const {
  std::fill(out.begin(), out.end(), qlin::complex{});
  for (const Term& term : terms) term.op.apply_add(term.coefficient(t), in, out);
  for (qlin::complex& v : out) v = qlin::complex{v.imag(), -v.real()};  // -i * v
}

qlin::ComplexMatrix annihilation(std::size_t n) {
  qlin::ComplexMatrix a(n);
  for (std::size_t k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

qlin::ComplexMatrix creation(std::size_t n) { return annihilation(n).adjoint(); }

qlin::ComplexMatrix number(std::size_t n) {
  qlin::ComplexMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

}  // namespace esdlab::detail
