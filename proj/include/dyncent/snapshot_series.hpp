#ifndef DYNCENT_SNAPSHOT_SERIES_HPP
#define DYNCENT_SNAPSHOT_SERIES_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "dyncent/sparse_matrix.hpp"

namespace dyncent {

enum class Orientation : std::uint8_t { raw = 0, influence = 1 };

/// Inclusive range of snapshot positions (0-based) within a series.
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const { return last - first + 1; }
};

/// An ordered sequence of timestamped adjacency snapshots over a shared
/// node registry. Time labels are contiguous integers (empty buckets are
/// materialized as zero matrices), so position p has label
/// first_label() + p. Immutable once built; safe to share across threads.
class SnapshotSeries {
 public:
  SnapshotSeries(std::shared_ptr<const NodeRegistry> registry,
                 std::vector<SparseRowMatrix> snapshots, std::int64_t first_label,
                 Orientation orientation);

  std::size_t size() const { return snapshots_.size(); }
  std::size_t node_count() const { return registry_->size(); }

  const SparseRowMatrix& snapshot(std::size_t pos) const { return snapshots_.at(pos); }
  std::int64_t time_label(std::size_t pos) const;
  std::size_t position_of_label(std::int64_t label) const;
  std::int64_t first_label() const { return first_label_; }
  std::int64_t last_label() const { return first_label_ + static_cast<std::int64_t>(size()) - 1; }

  Orientation orientation() const { return orientation_; }
  const NodeRegistry& registry() const { return *registry_; }
  std::shared_ptr<const NodeRegistry> registry_ptr() const { return registry_; }

  /// Per-snapshot transposition: every edge (i,j,w) becomes (j,i,w) and the
  /// orientation flag flips. Involutive.
  SnapshotSeries transposed() const;

  /// Elementwise sum of snapshots in [from, to] (inclusive positions).
  SparseRowMatrix aggregate(std::size_t from, std::size_t to) const;

  Interval full_interval() const { return {0, size() - 1}; }

  /// Validates an inclusive position pair against this series.
  Interval make_interval(std::size_t from, std::size_t to) const;

  std::size_t total_nnz() const;

 private:
  std::shared_ptr<const NodeRegistry> registry_;
  std::vector<SparseRowMatrix> snapshots_;
  std::int64_t first_label_;
  Orientation orientation_;
};

}  // namespace dyncent

#endif  // DYNCENT_SNAPSHOT_SERIES_HPP
