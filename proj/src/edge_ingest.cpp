#include "dyncent/edge_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <set>

#include "dyncent/errors.hpp"

namespace dyncent {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(const std::string& line) {
  // Tabs or commas both act as delimiters.
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t' || line[i] == ',') {
      out.push_back(trim(std::string_view(line).substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

double parse_number(const std::string& s, std::size_t line_no, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": cannot parse " + what + " '" + s + "'");
  }
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

std::int64_t Bucketing::bucket(double time) const {
  if (!(width > 0.0)) throw std::invalid_argument("bucket width must be positive");
  const double b = std::floor(time / width);
  if (!std::isfinite(b) || b < -9e18 || b > 9e18) {
    throw DataError("time value does not bucket to a finite snapshot index");
  }
  return static_cast<std::int64_t>(b);
}

std::vector<EdgeRecord> parse_edge_list(std::istream& in) {
  std::vector<EdgeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment_or_blank(line)) continue;
    auto fields = split_fields(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw DataError("line " + std::to_string(line_no) + ": expected 'source, dest, time[, weight]', got " +
                      std::to_string(fields.size()) + " fields");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw DataError("line " + std::to_string(line_no) + ": empty node label");
    }
    EdgeRecord rec;
    rec.src = fields[0];
    rec.dst = fields[1];
    rec.time = parse_number(fields[2], line_no, "time");
    if (fields.size() == 4) {
      rec.weight = parse_number(fields[3], line_no, "weight");
      if (rec.weight < 0.0) {
        throw DataError("line " + std::to_string(line_no) + ": negative weight in record '" + line + "'");
      }
    }
    rec.line = line_no;
    records.push_back(std::move(rec));
  }
  return records;
}

SnapshotSeries ingest_edges(const std::vector<EdgeRecord>& records, const Bucketing& bucketing) {
  if (records.empty()) throw DataError("no records");

  std::vector<std::string> labels;
  labels.reserve(records.size() * 2);
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& rec : records) {
    if (rec.weight < 0.0) {
      throw DataError("negative weight on edge " + rec.src + " -> " + rec.dst);
    }
    const std::int64_t b = bucketing.bucket(rec.time);
    lo = first ? b : std::min(lo, b);
    hi = first ? b : std::max(hi, b);
    first = false;
    labels.push_back(rec.src);
    labels.push_back(rec.dst);
  }

  auto registry = std::make_shared<NodeRegistry>(NodeRegistry::from_labels(std::move(labels)));
  const std::size_t dim = registry->size();
  const std::size_t buckets = static_cast<std::size_t>(hi - lo + 1);

  std::vector<std::vector<Triplet>> triplets(buckets);
  for (const auto& rec : records) {
    const std::size_t pos = static_cast<std::size_t>(bucketing.bucket(rec.time) - lo);
    triplets[pos].push_back(
        {registry->index_of(rec.src), registry->index_of(rec.dst), rec.weight});
  }

  std::vector<SparseRowMatrix> snapshots;
  snapshots.reserve(buckets);
  for (auto& t : triplets) {
    snapshots.push_back(SparseRowMatrix::from_triplets(dim, std::move(t)));
  }
  return SnapshotSeries(std::move(registry), std::move(snapshots), lo, Orientation::raw);
}

std::vector<CitationRecord> parse_citation_pairs(std::istream& in) {
  std::vector<CitationRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment_or_blank(line)) continue;
    // citing <TAB> cited; any whitespace run accepted as the separator
    std::vector<std::string> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.size() != 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected 'citing<TAB>cited'");
    }
    records.push_back({std::move(fields[0]), std::move(fields[1]), line_no});
  }
  return records;
}

std::int64_t arxiv_year(const std::string& id) {
  std::string digits = trim(id);
  if (digits.empty() || digits.size() > 7 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw DataError("not an arXiv-style identifier: '" + id + "'");
  }
  digits.insert(digits.begin(), 7 - digits.size(), '0');
  const int yy = (digits[0] - '0') * 10 + (digits[1] - '0');
  return yy >= 90 ? 1900 + yy : 2000 + yy;
}

std::unordered_map<std::string, std::int64_t> arxiv_timestamps(
    const std::vector<CitationRecord>& records) {
  std::unordered_map<std::string, std::int64_t> ts;
  for (const auto& rec : records) {
    ts.emplace(rec.citing, arxiv_year(rec.citing));
    ts.emplace(rec.cited, arxiv_year(rec.cited));
  }
  return ts;
}

std::vector<CitationRecord> clean_citations(
    const std::vector<CitationRecord>& records,
    const std::unordered_map<std::string, std::int64_t>& timestamps, CleanStats* stats) {
  CleanStats local;
  std::vector<CitationRecord> kept;
  kept.reserve(records.size());
  for (const auto& rec : records) {
    const auto citing_it = timestamps.find(rec.citing);
    const auto cited_it = timestamps.find(rec.cited);
    if (citing_it == timestamps.end()) throw DataError("no timestamp for node " + rec.citing);
    if (cited_it == timestamps.end()) throw DataError("no timestamp for node " + rec.cited);
    if (rec.citing == rec.cited) {
      ++local.dropped_self;
      continue;
    }
    if (cited_it->second > citing_it->second) {
      ++local.dropped_future;
      continue;
    }
    kept.push_back(rec);
  }
  if (stats) {
    stats->dropped_future = local.dropped_future;
    stats->dropped_self = local.dropped_self;
  }
  return kept;
}

SnapshotSeries build_citation_series(
    const std::vector<CitationRecord>& records,
    const std::unordered_map<std::string, std::int64_t>& timestamps, CleanStats* stats) {
  CleanStats local;
  auto kept = clean_citations(records, timestamps, &local);
  if (kept.empty()) throw DataError("no records survived citation cleaning");

  // Deduplicate so every kept citation carries weight 1.
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<EdgeRecord> edges;
  edges.reserve(kept.size());
  for (const auto& rec : kept) {
    if (!seen.emplace(rec.citing, rec.cited).second) {
      ++local.duplicates_merged;
      continue;
    }
    EdgeRecord e;
    e.src = rec.citing;
    e.dst = rec.cited;
    e.time = static_cast<double>(timestamps.at(rec.citing));
    e.weight = 1.0;
    e.line = rec.line;
    edges.push_back(std::move(e));
  }
  if (stats) *stats = local;

  SnapshotSeries series = ingest_edges(edges, Bucketing{1.0});

  // Attach per-node publication years to the registry.
  const auto& reg = series.registry();
  std::vector<std::int64_t> per_node(reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    per_node[i] = timestamps.at(reg.label(static_cast<NodeIndex>(i)));
  }
  auto registry = std::make_shared<NodeRegistry>(reg);
  registry->set_timestamps(std::move(per_node));

  std::vector<SparseRowMatrix> snaps;
  snaps.reserve(series.size());
  for (std::size_t p = 0; p < series.size(); ++p) snaps.push_back(series.snapshot(p));
  return SnapshotSeries(std::move(registry), std::move(snaps), series.first_label(),
                        Orientation::raw);
}

}  // namespace dyncent
