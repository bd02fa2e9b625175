#ifndef DYNCENT_KERNELS_HPP
#define DYNCENT_KERNELS_HPP

#include <span>

#include "dyncent/sparse_matrix.hpp"

namespace dyncent::kernels {

// Core sparse products. The OpenMP variants parallelize over rows; each
// output element is still accumulated in a fixed order by a single thread,
// so results are bitwise identical to the serial reference for any thread
// count.

/// y = M x  (serial reference)
void spmv_serial(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y);

/// y = M x  (row-parallel)
void spmv(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y);

/// y^T = x^T M, i.e. y[j] = sum_i x[i] * M[i][j]. Row scatter, serial:
/// used for single-vector influence queries where x is sparse-ish.
void vecmat(const SparseRowMatrix& m, std::span<const double> x, std::span<double> y);

/// Serial reference for the retained-matrix merge in retention.cpp.
SparseRowMatrix scaled_sum_serial(std::span<const SparseRowMatrix* const> mats,
                                  std::span<const double> coeffs);

}  // namespace dyncent::kernels

#endif  // DYNCENT_KERNELS_HPP
