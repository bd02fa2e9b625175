#include "dyncent/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyncent {

SparseRowMatrix SparseRowMatrix::from_triplets(std::size_t dim, std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= dim || t.col >= dim) {
      throw std::invalid_argument("triplet index out of range");
    }
    if (t.weight < 0.0) {
      throw std::invalid_argument("negative edge weight");
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseRowMatrix m(dim);
  m.cols_.reserve(triplets.size());
  m.vals_.reserve(triplets.size());
  std::size_t i = 0;
  for (std::size_t row = 0; row < dim; ++row) {
    while (i < triplets.size() && triplets[i].row == row) {
      const NodeIndex col = triplets[i].col;
      double w = 0.0;
      while (i < triplets.size() && triplets[i].row == row && triplets[i].col == col) {
        w += triplets[i].weight;
        ++i;
      }
      if (w != 0.0) {
        m.cols_.push_back(col);
        m.vals_.push_back(w);
      }
    }
    m.row_ptr_[row + 1] = m.cols_.size();
  }
  return m;
}

SparseRowMatrix SparseRowMatrix::from_csr(std::size_t dim, std::vector<std::size_t> row_ptr,
                                          std::vector<NodeIndex> cols, std::vector<double> vals) {
  if (row_ptr.size() != dim + 1 || row_ptr.front() != 0 || row_ptr.back() != cols.size() ||
      cols.size() != vals.size()) {
    throw std::invalid_argument("inconsistent CSR arrays");
  }
  for (std::size_t r = 0; r < dim; ++r) {
    if (row_ptr[r] > row_ptr[r + 1]) throw std::invalid_argument("row_ptr not monotone");
    for (std::size_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
      if (cols[k] >= dim) throw std::invalid_argument("column index out of range");
      if (k > row_ptr[r] && cols[k] <= cols[k - 1]) {
        throw std::invalid_argument("columns not strictly increasing within a row");
      }
      if (vals[k] < 0.0) throw std::invalid_argument("negative edge weight");
    }
  }
  SparseRowMatrix m(dim);
  m.row_ptr_ = std::move(row_ptr);
  m.cols_ = std::move(cols);
  m.vals_ = std::move(vals);
  return m;
}

double SparseRowMatrix::entry(NodeIndex i, NodeIndex j) const {
  const auto cols = row_cols(i);
  const auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it == cols.end() || *it != j) return 0.0;
  return vals_[row_ptr_[i] + static_cast<std::size_t>(it - cols.begin())];
}

double SparseRowMatrix::total_weight() const {
  double s = 0.0;
  for (double v : vals_) s += v;
  return s;
}

double SparseRowMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (double v : row_vals(i)) s += v;
  return s;
}

SparseRowMatrix SparseRowMatrix::transposed() const {
  SparseRowMatrix t(dim_);
  t.cols_.resize(nnz());
  t.vals_.resize(nnz());

  // column counts -> prefix sums -> scatter
  std::vector<std::size_t> counts(dim_ + 1, 0);
  for (NodeIndex c : cols_) counts[c + 1]++;
  for (std::size_t i = 0; i < dim_; ++i) counts[i + 1] += counts[i];
  t.row_ptr_ = counts;

  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t p = cursor[cols_[k]]++;
      t.cols_[p] = static_cast<NodeIndex>(r);
      t.vals_[p] = vals_[k];
    }
  }
  return t;
}

SparseRowMatrix SparseRowMatrix::scaled_sum(std::span<const SparseRowMatrix* const> mats,
                                            std::span<const double> coeffs) {
  if (mats.empty() || mats.size() != coeffs.size()) {
    throw std::invalid_argument("scaled_sum: matrix/coefficient count mismatch");
  }
  const std::size_t dim = mats.front()->dim();
  for (const auto* m : mats) {
    if (m->dim() != dim) throw std::invalid_argument("scaled_sum: dimension mismatch");
  }

  // Per-row k-way merge of sorted column lists; rows are independent.
  std::vector<std::vector<NodeIndex>> row_cols(dim);
  std::vector<std::vector<double>> row_vals(dim);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t r = 0; r < dim; ++r) {
    std::vector<std::pair<NodeIndex, double>> acc;
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const auto cs = mats[k]->row_cols(r);
      const auto vs = mats[k]->row_vals(r);
      for (std::size_t e = 0; e < cs.size(); ++e) {
        acc.emplace_back(cs[e], coeffs[k] * vs[e]);
      }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& rc = row_cols[r];
    auto& rv = row_vals[r];
    for (std::size_t e = 0; e < acc.size();) {
      const NodeIndex col = acc[e].first;
      double w = 0.0;
      while (e < acc.size() && acc[e].first == col) w += acc[e++].second;
      if (w != 0.0) {
        rc.push_back(col);
        rv.push_back(w);
      }
    }
  }

  SparseRowMatrix out(dim);
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    nnz += row_cols[r].size();
    out.row_ptr_[r + 1] = nnz;
  }
  out.cols_.resize(nnz);
  out.vals_.resize(nnz);
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < dim; ++r) {
    std::copy(row_cols[r].begin(), row_cols[r].end(), out.cols_.begin() + out.row_ptr_[r]);
    std::copy(row_vals[r].begin(), row_vals[r].end(), out.vals_.begin() + out.row_ptr_[r]);
  }
  return out;
}

}  // namespace dyncent
