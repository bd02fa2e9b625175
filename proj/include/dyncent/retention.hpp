#ifndef DYNCENT_RETENTION_HPP
#define DYNCENT_RETENTION_HPP

#include <limits>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "dyncent/snapshot_series.hpp"

namespace dyncent {

inline constexpr std::size_t kUnboundedRetention = std::numeric_limits<std::size_t>::max();

/// Tunables of the dynamic-centrality family.
///
///   alpha   attenuation on indirect hops, in [0, 1]
///   beta    initiation attenuation (> 0); factors out linearly, default 1
///   gamma   retention probability, in [0, 1]; 0 = memoryless
///   retention_length  how many past snapshots a retained matrix folds in
///                     (m >= 1; unbounded by default)
struct DynParams {
  double alpha = 0.0;
  double beta = 1.0;
  double gamma = 0.0;
  std::size_t retention_length = kUnboundedRetention;

  void validate() const;  // throws std::invalid_argument
};

/// Retained adjacency matrix at position `pos`: the memory-weighted sum
///
///   sum_{h=0}^{min(pos+1, m)-1} gamma^h * A(pos - h)
///
/// gamma^0 is 1 even for gamma = 0, so gamma = 0 (or m = 1) yields exactly
/// the snapshot itself.
SparseRowMatrix retained_matrix(const SnapshotSeries& series, std::size_t pos, double gamma,
                                std::size_t retention_length = kUnboundedRetention);

/// Lazily materialized, cached retained matrices for one (series, gamma, m)
/// triple. When gamma = 0 or m = 1 the snapshot matrices are aliased
/// instead of copied. Safe for concurrent get() calls.
class RetainedProvider {
 public:
  RetainedProvider(const SnapshotSeries& series, double gamma, std::size_t retention_length,
                   bool cache = true);

  std::shared_ptr<const SparseRowMatrix> get(std::size_t pos) const;

  const SnapshotSeries& series() const { return series_; }
  double gamma() const { return gamma_; }
  std::size_t retention_length() const { return retention_length_; }

 private:
  const SnapshotSeries& series_;
  double gamma_;
  std::size_t retention_length_;
  bool cache_enabled_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::shared_ptr<const SparseRowMatrix>> cache_;
};

}  // namespace dyncent

#endif  // DYNCENT_RETENTION_HPP
