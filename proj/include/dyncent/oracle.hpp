#ifndef DYNCENT_ORACLE_HPP
#define DYNCENT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "dyncent/retention.hpp"
#include "dyncent/snapshot_series.hpp"

namespace dyncent::oracle {

// Independent ground truth for the engine: literal dense evaluation,
// exhaustive path enumeration, and stochastic simulation. Guardrailed to
// small instances; exists to validate, not to scale.

class DenseMatrix {
 public:
  DenseMatrix() : dim_(0) {}
  explicit DenseMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  std::vector<double> row_sums() const;
  DenseMatrix multiplied_by(const DenseMatrix& other) const;
  void add_scaled(const DenseMatrix& other, double coeff);

  static DenseMatrix from_sparse(const SparseRowMatrix& m);

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

inline constexpr std::size_t kMaxOracleNodes = 64;
inline constexpr std::size_t kMaxOracleInterval = 8;

/// The retained cumulative dynamic centrality matrix over the interval,
/// evaluated literally with dense products: for each start position k in
/// the interval, beta R(t_k) + beta alpha R(t_k)R(t_{k+1}) + ... up to the
/// interval end, all summed. Guardrails: dim <= 64, interval length <= 8.
DenseMatrix rc_matrix_direct(const SnapshotSeries& series, Interval interval,
                             const DynParams& params);

/// One attenuated time-respecting path: hops at consecutive transmission
/// times, each hop optionally reaching back `lag` snapshots through memory.
/// weight = beta * alpha^(hops-1) * gamma^(sum of lags) * product of edge
/// weights.
struct WeightedTimePath {
  std::size_t start;                 // position of the first transmission
  std::vector<NodeIndex> nodes;      // node sequence, length hops+1
  std::vector<std::size_t> times;    // transmission position per hop
  std::vector<std::size_t> lags;     // memory lag per hop (0 = current edge)
  double weight;
};

struct PathEnumeration {
  std::vector<WeightedTimePath> paths;  // populated only when capture_paths
  std::vector<double> totals;           // per-target accumulated weight
  std::size_t path_count = 0;
};

/// Exhaustive expansion of the retained products for one source row.
/// Zero-weight branches (an attenuation factor of exactly 0) are pruned.
/// Per-target totals equal the source's row of rc_matrix_direct.
PathEnumeration enumerate_time_paths(const SnapshotSeries& series, Interval interval,
                                     const DynParams& params, NodeIndex source,
                                     bool capture_paths = true);

struct DiffusionEstimate {
  DenseMatrix mean;       // empirical per-(source,target) delivery counts
  DenseMatrix std_error;  // standard error of each mean
  std::uint64_t trials;
};

/// Monte Carlo simulation of the transmission process: per trial and start
/// time, each node initiates with probability beta; instances forward with
/// probability alpha per step, and lagged edges require one retention
/// success per lag step. Deliveries accumulate additively, so the expected
/// count equals the path-count series. All of alpha, beta, gamma must be
/// probabilities (<= 1). Seeded and reproducible for any thread count.
DiffusionEstimate monte_carlo_diffusion(const SnapshotSeries& series, Interval interval,
                                        const DynParams& params, std::uint64_t trials,
                                        std::uint64_t seed);

}  // namespace dyncent::oracle

#endif  // DYNCENT_ORACLE_HPP
