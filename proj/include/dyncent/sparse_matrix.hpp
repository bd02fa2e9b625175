#ifndef DYNCENT_SPARSE_MATRIX_HPP
#define DYNCENT_SPARSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dyncent/node_registry.hpp"

namespace dyncent {

struct Triplet {
  NodeIndex row;
  NodeIndex col;
  double weight;
};

/// Square, row-indexed sparse matrix (CSR). Weights are nonnegative,
/// column indices strictly increasing within a row, no duplicate entries.
class SparseRowMatrix {
 public:
  SparseRowMatrix() : dim_(0), row_ptr_(1, 0) {}
  explicit SparseRowMatrix(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {}

  /// Builds from triplets; duplicate (row, col) weights are summed and
  /// zero-weight entries dropped. Throws std::invalid_argument on negative
  /// weights or out-of-range indices.
  static SparseRowMatrix from_triplets(std::size_t dim, std::vector<Triplet> triplets);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return cols_.size(); }
  bool empty() const { return cols_.empty(); }

  std::span<const NodeIndex> row_cols(std::size_t i) const {
    return {cols_.data() + row_ptr_[i], cols_.data() + row_ptr_[i + 1]};
  }
  std::span<const double> row_vals(std::size_t i) const {
    return {vals_.data() + row_ptr_[i], vals_.data() + row_ptr_[i + 1]};
  }
  std::size_t row_nnz(std::size_t i) const { return row_ptr_[i + 1] - row_ptr_[i]; }

  /// Entry lookup by binary search; absent entries read as 0.
  double entry(NodeIndex i, NodeIndex j) const;

  double total_weight() const;
  double row_sum(std::size_t i) const;

  SparseRowMatrix transposed() const;

  /// Elementwise sum of `coeffs[k] * mats[k]`. All matrices share one
  /// dimension. Rows are merged in parallel.
  static SparseRowMatrix scaled_sum(std::span<const SparseRowMatrix* const> mats,
                                    std::span<const double> coeffs);

  bool operator==(const SparseRowMatrix& other) const = default;

  const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
  const std::vector<NodeIndex>& cols() const { return cols_; }
  const std::vector<double>& vals() const { return vals_; }

  /// Adopts prebuilt CSR arrays (validated). Used by the series loader.
  static SparseRowMatrix from_csr(std::size_t dim, std::vector<std::size_t> row_ptr,
                                  std::vector<NodeIndex> cols, std::vector<double> vals);

  std::size_t memory_bytes() const {
    return row_ptr_.size() * sizeof(std::size_t) + cols_.size() * sizeof(NodeIndex) +
           vals_.size() * sizeof(double);
  }

 private:
  std::size_t dim_;
  std::vector<std::size_t> row_ptr_;
  std::vector<NodeIndex> cols_;
  std::vector<double> vals_;
};

}  // namespace dyncent

#endif  // DYNCENT_SPARSE_MATRIX_HPP
