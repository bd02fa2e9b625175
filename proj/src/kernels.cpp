#include "dyncent/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dyncent::kernels {

void spmv_serial(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y) {
  const std::size_t dim = m.dim();
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("spmv: size mismatch");
  const auto& row_ptr = m.row_ptr();
  const auto& cols = m.cols();
  const auto& vals = m.vals();
  for (std::size_t i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += vals[k] * x[cols[k]];
    }
    y[i] = acc;
  }
}

void spmv(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y) {
  const std::size_t dim = m.dim();
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("spmv: size mismatch");
  const auto& row_ptr = m.row_ptr();
  const auto& cols = m.cols();
  const auto& vals = m.vals();
  const std::int64_t n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      acc += vals[k] * x[cols[k]];
    }
    y[i] = acc;
  }
}

void vecmat(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y) {
  const std::size_t dim = m.dim();
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("vecmat: size mismatch");
  std::fill(y.begin(), y.end(), 0.0);
  const auto& row_ptr = m.row_ptr();
  const auto& cols = m.cols();
  const auto& vals = m.vals();
  for (std::size_t i = 0; i < dim; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
      y[cols[k]] += xi * vals[k];
    }
  }
}

SparseRowMatrix scaled_sum_serial(std::span<const SparseRowMatrix* const> mats,
                                  std::span<const double> coeffs) {
  if (mats.empty() || mats.size() != coeffs.size()) {
    throw std::invalid_argument("scaled_sum_serial: matrix/coefficient count mismatch");
  }
  const std::size_t dim = mats.front()->dim();
  std::vector<Triplet> triplets;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const auto& m = *mats[k];
    if (m.dim() != dim) throw std::invalid_argument("scaled_sum_serial: dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) {
      const auto cs = m.row_cols(r);
      const auto vs = m.row_vals(r);
      for (std::size_t e = 0; e < cs.size(); ++e) {
        triplets.push_back({static_cast<NodeIndex>(r), cs[e], coeffs[k] * vs[e]});
      }
    }
  }
  return SparseRowMatrix::from_triplets(dim, std::move(triplets));
}

}  // namespace dyncent::kernels
