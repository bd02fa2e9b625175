#ifndef DYNCENT_CENTRALITY_HPP
#define DYNCENT_CENTRALITY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dyncent/retention.hpp"
#include "dyncent/snapshot_series.hpp"

namespace dyncent {

/// Per-node nonnegative scores aligned to a registry, tagged with the
/// metric and parameters that produced them.
struct ScoreVector {
  std::shared_ptr<const NodeRegistry> registry;
  std::vector<double> values;
  std::string provenance;
};

struct RankedNode {
  std::string label;
  double score;
  std::uint32_t rank;  // positional, 1..N after tie-break
};

/// Deterministic ranking: non-increasing score, ties broken by ascending
/// node label, positional ranks 1..N (tied scores get distinct ranks).
struct Ranking {
  std::vector<RankedNode> entries;
  static constexpr const char* tie_rule = "score-desc,label-asc";
};

Ranking rank(const ScoreVector& scores);

/// Optional instrumentation filled by dynamic_centrality.
struct DcStats {
  std::vector<std::uint64_t> edges_touched_per_iteration;
  std::uint64_t edges_touched_total = 0;
  std::size_t peak_workspace_bytes = 0;
};

/// Dynamic centrality over an interval: for every node, the attenuated
/// count of time-respecting paths it originates within the interval,
/// DC_i = sum_j of the retained cumulative dynamic centrality entry (i,j).
///
/// Computed by the backward recursion over retained matrices
///
///   r_0 <- beta * R(t_last) e
///   r_i <- R(t_{last-i}) (beta e + alpha r_{i-1})
///   DC  <- sum_i r_i
///
/// One sparse matrix-vector product per interval snapshot; each stored
/// edge of the current retained matrix is touched exactly once per
/// iteration. Retained matrices draw on the full series history (subject
/// to the retention length), also when the interval starts later.
/// Throws NumericError if scores overflow to infinity.
ScoreVector dynamic_centrality(const SnapshotSeries& series, Interval interval,
                               const DynParams& params, DcStats* stats = nullptr);

/// Same computation against a prebuilt provider (shared across rolling
/// windows or repeated queries).
ScoreVector dynamic_centrality(const RetainedProvider& retained, Interval interval,
                               const DynParams& params, DcStats* stats = nullptr);

/// Row `source` of the retained cumulative dynamic centrality matrix:
/// how much of what `source` sends reaches each node. Forward vector
/// recursion seeded at the source indicator; never materializes the
/// matrix.
ScoreVector influence_of(const SnapshotSeries& series, Interval interval, const DynParams& params,
                         const std::string& source_label);

/// Column `target`: how much each node sends that reaches `target`.
/// Runs the forward recursion on the transposed retained matrices in
/// reverse time order, which is the column of the same matrix.
ScoreVector influencers_of(const SnapshotSeries& series, Interval interval,
                           const DynParams& params, const std::string& target_label);

/// Static alpha-centrality row sums on one (aggregate) matrix:
/// beta * sum_{k=1}^{max_terms} alpha^(k-1) A^k e, via repeated
/// matrix-vector products. Throws NumericError on overflow to infinity.
ScoreVector static_alpha_centrality(const SparseRowMatrix& matrix,
                                    std::shared_ptr<const NodeRegistry> registry, double alpha,
                                    double beta = 1.0, std::size_t max_terms = 10);

/// One independently computed DC vector per contiguous window of `window`
/// snapshots, keyed by the window's end position.
std::vector<std::pair<std::size_t, ScoreVector>> rolling_dc(const SnapshotSeries& series,
                                                            const DynParams& params,
                                                            std::size_t window);

}  // namespace dyncent

#endif  // DYNCENT_CENTRALITY_HPP
