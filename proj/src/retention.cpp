#include "dyncent/retention.hpp"

#include <stdexcept>
#include <vector>

namespace dyncent {

void DynParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in [0, 1]");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("beta must be positive");
  }
  if (retention_length < 1) {
    throw std::invalid_argument("retention length must be at least 1");
  }
}

SparseRowMatrix retained_matrix(const SnapshotSeries& series, std::size_t pos, double gamma,
                                std::size_t retention_length) {
  if (pos >= series.size()) throw std::out_of_range("snapshot position out of range");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in [0, 1]");
  if (retention_length < 1) throw std::invalid_argument("retention length must be at least 1");

  const std::size_t terms = std::min(pos + 1, retention_length);
  std::vector<const SparseRowMatrix*> mats;
  std::vector<double> coeffs;
  mats.reserve(terms);
  coeffs.reserve(terms);
  double g = 1.0;  // gamma^0 == 1 also when gamma == 0
  for (std::size_t h = 0; h < terms; ++h) {
    mats.push_back(&series.snapshot(pos - h));
    coeffs.push_back(g);
    g *= gamma;
  }
  return SparseRowMatrix::scaled_sum(mats, coeffs);
}

RetainedProvider::RetainedProvider(const SnapshotSeries& series, double gamma,
                                   std::size_t retention_length, bool cache)
    : series_(series), gamma_(gamma), retention_length_(retention_length), cache_enabled_(cache) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in [0, 1]");
  if (retention_length < 1) throw std::invalid_argument("retention length must be at least 1");
}

std::shared_ptr<const SparseRowMatrix> RetainedProvider::get(std::size_t pos) const {
  if (pos >= series_.size()) throw std::out_of_range("snapshot position out of range");

  // Memoryless: the retained matrix is the snapshot itself. Alias it.
  if (gamma_ == 0.0 || retention_length_ == 1 || pos == 0) {
    return std::shared_ptr<const SparseRowMatrix>(&series_.snapshot(pos), [](auto*) {});
  }

  if (cache_enabled_) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(pos);
    if (it != cache_.end()) return it->second;
  }
  auto built = std::make_shared<const SparseRowMatrix>(
      retained_matrix(series_, pos, gamma_, retention_length_));
  if (cache_enabled_) {
    std::lock_guard lock(mutex_);
    cache_.emplace(pos, built);
  }
  return built;
}

}  // namespace dyncent
