#ifndef DYNCENT_EDGE_INGEST_HPP
#define DYNCENT_EDGE_INGEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyncent/snapshot_series.hpp"

namespace dyncent {

struct EdgeRecord {
  std::string src;
  std::string dst;
  double time = 0.0;
  double weight = 1.0;
  std::size_t line = 0;  // 1-based source line, 0 if synthetic
};

/// Maps a raw time value to an integer snapshot label: floor(time / width).
struct Bucketing {
  double width = 1.0;

  std::int64_t bucket(double time) const;
};

/// Parses the edge-list text format: one `source, dest, time[, weight]`
/// record per line, tab- or comma-separated; `#` lines and blank lines are
/// ignored. Throws DataError with the line number on malformed records or
/// negative weights.
std::vector<EdgeRecord> parse_edge_list(std::istream& in);

/// Buckets records into snapshots. One matrix per bucket over the occupied
/// label range, with empty interior buckets materialized as zero matrices.
/// Duplicate (src, dst) edges within a bucket sum their weights (absent
/// weight = 1). Deterministic: any permutation of `records` yields an
/// identical series.
SnapshotSeries ingest_edges(const std::vector<EdgeRecord>& records,
                            const Bucketing& bucketing = {});

// --- citation pipeline -----------------------------------------------------

struct CitationRecord {
  std::string citing;
  std::string cited;
  std::size_t line = 0;
};

/// Parses `citing<TAB>cited` pairs (whitespace-separated; `#` comments).
std::vector<CitationRecord> parse_citation_pairs(std::istream& in);

/// Submission year from an arXiv-style identifier: the id is left-padded
/// with zeros to 7 digits, then the first two digits map 90-99 to the
/// 1990s and 00-89 to the 2000s.
std::int64_t arxiv_year(const std::string& id);

/// Year for every endpoint appearing in `records`, via arxiv_year.
std::unordered_map<std::string, std::int64_t> arxiv_timestamps(
    const std::vector<CitationRecord>& records);

struct CleanStats {
  std::size_t dropped_future = 0;
  std::size_t dropped_self = 0;
  std::size_t duplicates_merged = 0;
};

/// Drops self-citations and citations to nodes whose timestamp exceeds the
/// citing node's timestamp. Same-year citations are kept. Every endpoint
/// must have a timestamp; otherwise DataError naming the node.
std::vector<CitationRecord> clean_citations(
    const std::vector<CitationRecord>& records,
    const std::unordered_map<std::string, std::int64_t>& timestamps, CleanStats* stats = nullptr);

/// Cleans, deduplicates (0/1 weights), and buckets citations by the citing
/// node's year; the resulting series is raw-oriented (citing -> cited) and
/// its registry carries per-node timestamps. Transpose for influence flow.
SnapshotSeries build_citation_series(const std::vector<CitationRecord>& records,
                                     const std::unordered_map<std::string, std::int64_t>& timestamps,
                                     CleanStats* stats = nullptr);

}  // namespace dyncent

#endif  // DYNCENT_EDGE_INGEST_HPP
