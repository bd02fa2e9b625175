#include "dyncent/node_registry.hpp"

#include <algorithm>
#include <cctype>

#include "dyncent/errors.hpp"

namespace dyncent {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool NodeRegistry::label_less(const std::string& a, const std::string& b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;  // numeric labels first
  if (na && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NodeRegistry NodeRegistry::from_labels(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  NodeRegistry reg;
  reg.labels_ = std::move(labels);
  reg.index_.reserve(reg.labels_.size());
  for (std::size_t i = 0; i < reg.labels_.size(); ++i) {
    reg.index_.emplace(reg.labels_[i], static_cast<NodeIndex>(i));
  }
  return reg;
}

NodeIndex NodeRegistry::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw DataError("unknown node: " + label);
  }
  return it->second;
}

std::optional<NodeIndex> NodeRegistry::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void NodeRegistry::set_timestamps(std::vector<std::int64_t> per_node) {
  if (per_node.size() != labels_.size()) {
    throw std::invalid_argument("timestamp vector size does not match registry size");
  }
  timestamps_ = std::move(per_node);
}

}  // namespace dyncent
