#include "hgc/scat/monotone.hpp"

#include <algorithm>

#include "hgc/scat/errors.hpp"

namespace hgc {

MonotoneMap::MonotoneMap(std::vector<int> values, int target)
    : values_(std::move(values)), target_(target) {
  if (values_.empty()) throw InvalidArgument("monotone map with empty domain");
  if (target_ < 0) throw InvalidArgument("monotone map with negative target");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k] < 0 || values_[k] > target_)
      throw InvalidArgument("monotone map value out of range: " + str());
    if (k > 0 && values_[k - 1] > values_[k])
      throw InvalidArgument("map is not weakly increasing: " + str());
  }
}

MonotoneMap MonotoneMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = k;
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InvalidArgument("coface index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k <= n; ++k)
    if (k != i) v.push_back(k);
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n) throw InvalidArgument("codegeneracy index out of range");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n + 2));
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= j ? k : k - 1);
  return MonotoneMap(std::move(v), n);
}

MonotoneMap MonotoneMap::constant(int m, int target, int value) {
  return MonotoneMap(std::vector<int>(static_cast<std::size_t>(m + 1), value), target);
}

MonotoneMap MonotoneMap::inclusion(const std::vector<int>& subset, int n) {
  for (std::size_t k = 1; k < subset.size(); ++k)
    if (subset[k - 1] >= subset[k]) throw InvalidArgument("subset must be strictly increasing");
  return MonotoneMap(subset, n);
}

std::vector<MonotoneMap> MonotoneMap::all(int m, int n) {
  std::vector<MonotoneMap> out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.emplace_back(v, n);
    // next weakly increasing sequence in lexicographic order
    int k = m;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == n) --k;
    if (k < 0) break;
    int next = v[static_cast<std::size_t>(k)] + 1;
    for (int r = k; r <= m; ++r) v[static_cast<std::size_t>(r)] = next;
  }
  return out;
}

bool MonotoneMap::injective() const {
  return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

bool MonotoneMap::surjective() const {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] - values_[k - 1] > 1) return false;
  return true;
}

std::pair<MonotoneMap, MonotoneMap> MonotoneMap::epi_mono() const {
  std::vector<int> image;
  std::vector<int> epi;
  epi.reserve(values_.size());
  for (int v : values_) {
    if (image.empty() || image.back() != v) image.push_back(v);
    epi.push_back(static_cast<int>(image.size()) - 1);
  }
  int r = static_cast<int>(image.size()) - 1;
  return {MonotoneMap(std::move(epi), r), MonotoneMap(std::move(image), target_)};
}

MonotoneMap MonotoneMap::prefix(int k) const {
  std::vector<int> v(values_.begin(), values_.begin() + k + 1);
  int t = v.back();
  return MonotoneMap(std::move(v), t);
}

std::string MonotoneMap::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(values_[k]);
  }
  return s + "]->[" + std::to_string(target_) + "]";
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target_dim() != g.source_dim()) throw InvalidArgument("monotone maps not composable");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return MonotoneMap(std::move(v), g.target_dim());
}

}  // namespace hgc
