#include "dyncent/snapshot_series.hpp"

#include <stdexcept>

#include "dyncent/errors.hpp"

namespace dyncent {

SnapshotSeries::SnapshotSeries(std::shared_ptr<const NodeRegistry> registry,
                               std::vector<SparseRowMatrix> snapshots, std::int64_t first_label,
                               Orientation orientation)
    : registry_(std::move(registry)),
      snapshots_(std::move(snapshots)),
      first_label_(first_label),
      orientation_(orientation) {
  if (!registry_) throw std::invalid_argument("series requires a registry");
  if (snapshots_.empty()) throw std::invalid_argument("series must hold at least one snapshot");
  for (const auto& m : snapshots_) {
    if (m.dim() != registry_->size()) {
      throw std::invalid_argument("snapshot dimension does not match registry");
    }
  }
  if (registry_->has_timestamps()) {
    for (std::int64_t ts : registry_->timestamps()) {
      if (ts > last_label()) {
        throw std::invalid_argument("node timestamp lies beyond the series range");
      }
    }
  }
}

std::int64_t SnapshotSeries::time_label(std::size_t pos) const {
  if (pos >= size()) throw std::out_of_range("snapshot position out of range");
  return first_label_ + static_cast<std::int64_t>(pos);
}

std::size_t SnapshotSeries::position_of_label(std::int64_t label) const {
  if (label < first_label_ || label > last_label()) {
    throw std::out_of_range("time label outside the series range");
  }
  return static_cast<std::size_t>(label - first_label_);
}

SnapshotSeries SnapshotSeries::transposed() const {
  std::vector<SparseRowMatrix> flipped;
  flipped.reserve(snapshots_.size());
  for (const auto& m : snapshots_) flipped.push_back(m.transposed());
  const Orientation o =
      orientation_ == Orientation::raw ? Orientation::influence : Orientation::raw;
  return SnapshotSeries(registry_, std::move(flipped), first_label_, o);
}

SparseRowMatrix SnapshotSeries::aggregate(std::size_t from, std::size_t to) const {
  if (from > to || to >= size()) throw std::out_of_range("aggregate interval out of range");
  std::vector<const SparseRowMatrix*> mats;
  std::vector<double> ones;
  for (std::size_t p = from; p <= to; ++p) {
    mats.push_back(&snapshots_[p]);
    ones.push_back(1.0);
  }
  return SparseRowMatrix::scaled_sum(mats, ones);
}

Interval SnapshotSeries::make_interval(std::size_t from, std::size_t to) const {
  if (from > to) throw std::invalid_argument("empty interval");
  if (to >= size()) throw std::out_of_range("interval end beyond series");
  return {from, to};
}

std::size_t SnapshotSeries::total_nnz() const {
  std::size_t n = 0;
  for (const auto& m : snapshots_) n += m.nnz();
  return n;
}

}  // namespace dyncent
