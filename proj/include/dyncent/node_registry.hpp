#ifndef DYNCENT_NODE_REGISTRY_HPP
#define DYNCENT_NODE_REGISTRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dyncent {

using NodeIndex = std::uint32_t;

/// Bijective mapping between node labels and dense indices 0..N-1.
///
/// Indices are assigned in canonical label order (see label_less), so a
/// registry built from the same label set is identical regardless of the
/// order labels were encountered in. Optionally carries a per-node
/// timestamp (publication time, in snapshot/time-label units).
class NodeRegistry {
 public:
  NodeRegistry() = default;

  /// Builds a registry from an arbitrary label collection: labels are
  /// deduplicated and sorted canonically.
  static NodeRegistry from_labels(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }

  /// Index for a known label; throws DataError naming the label otherwise.
  NodeIndex index_of(const std::string& label) const;

  std::optional<NodeIndex> find(const std::string& label) const;

  const std::string& label(NodeIndex idx) const { return labels_.at(idx); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_timestamps() const { return !timestamps_.empty(); }
  void set_timestamps(std::vector<std::int64_t> per_node);
  std::int64_t timestamp(NodeIndex idx) const { return timestamps_.at(idx); }
  const std::vector<std::int64_t>& timestamps() const { return timestamps_; }

  /// Canonical label order: all-digit labels sort numerically (by length,
  /// then lexicographically) and come before other labels; everything else
  /// is plain lexicographic. Also the ranking tie-break order.
  static bool label_less(const std::string& a, const std::string& b);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::int64_t> timestamps_;
};

}  // namespace dyncent

#endif  // DYNCENT_NODE_REGISTRY_HPP
