#ifndef DYNCENT_BASELINES_HPP
#define DYNCENT_BASELINES_HPP

#include <optional>

#include "dyncent/centrality.hpp"
#include "dyncent/snapshot_series.hpp"

namespace dyncent {

struct PageRankConfig {
  double jump = 0.1;         // random-jump probability, in (0, 1)
  double tolerance = 1e-10;  // L1 convergence threshold
  std::size_t max_iterations = 200;

  void validate() const;
};

/// Stationary vector of the jump-damped, row-normalized walk on `matrix`.
/// Dangling rows redistribute uniformly; the result sums to 1. Throws
/// NumericError with the residual if the iteration does not converge.
ScoreVector pagerank(const SparseRowMatrix& matrix, std::shared_ptr<const NodeRegistry> registry,
                     const PageRankConfig& config = {});

/// Per-node total outgoing weight across the interval's snapshots. On an
/// influence-oriented citation series this is the citations received.
ScoreVector citation_counts(const SnapshotSeries& series, Interval interval);

/// Spearman rank correlation: Pearson correlation of average-ranked scores
/// (ties get the mean of their rank positions). Returns nullopt when either
/// ranking has zero variance (correlation undefined).
std::optional<double> spearman(const ScoreVector& a, const ScoreVector& b);

}  // namespace dyncent

#endif  // DYNCENT_BASELINES_HPP
