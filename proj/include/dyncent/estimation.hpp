#ifndef DYNCENT_ESTIMATION_HPP
#define DYNCENT_ESTIMATION_HPP

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncent/edge_ingest.hpp"
#include "dyncent/snapshot_series.hpp"

namespace dyncent {

/// Least-squares fit of y = scale * rate^x in log space.
struct GeomFit {
  double rate = 0.0;
  double scale = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
  std::size_t points_excluded = 0;  // y <= 0 points dropped before fitting
};

/// N_j for j = 1..max_len: the grand sum of the product
/// A(end-j+1) * ... * A(end) of consecutive snapshots ending at `end`
/// (weighted count of consecutive-snapshot chains of length j). One
/// matrix-vector sweep per j.
std::vector<std::pair<std::size_t, double>> chain_counts(const SnapshotSeries& series,
                                                         std::size_t end, std::size_t max_len);

/// E(W_k) for k = 1..max_age: citation-age fractions. For each source year
/// j, W^j_k is the fraction of its citations (among ages 1..max_age) that
/// point k years back; E(W_k) averages W^j_k uniformly over source years
/// with at least one such citation. Throws DataError when no year
/// contributes.
std::vector<std::pair<std::size_t, double>> age_fractions(
    const std::vector<CitationRecord>& records,
    const std::unordered_map<std::string, std::int64_t>& timestamps, std::size_t max_age);

/// Fits ln y = ln scale + x ln rate by ordinary least squares over the
/// points with y > 0; r_squared is computed in log space. Requires at
/// least two positive points.
GeomFit geometric_fit(const std::vector<std::pair<std::size_t, double>>& points);

/// Mean chain length 1 / (1 - alpha) implied by a geometric chain-length
/// distribution; requires alpha in [0, 1).
double mean_chain_length(double alpha);

struct ParamEstimate {
  GeomFit alpha_fit;  // rate estimates the hop attenuation
  GeomFit gamma_fit;  // rate estimates the retention probability
  std::vector<std::pair<std::size_t, double>> counts;     // (j, N_j)
  std::vector<std::pair<std::size_t, double>> fractions;  // (k, E(W_k))
};

/// chain_counts -> geometric_fit and age_fractions -> geometric_fit.
ParamEstimate estimate_params(const SnapshotSeries& series,
                              const std::vector<CitationRecord>& records,
                              const std::unordered_map<std::string, std::int64_t>& timestamps,
                              std::size_t end, std::size_t max_len, std::size_t max_age);

}  // namespace dyncent

#endif  // DYNCENT_ESTIMATION_HPP
