#include "hgc/scat/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hgc/scat/errors.hpp"

namespace hgc {

namespace {

std::string where(int n, std::size_t x) {
  return "degree " + std::to_string(n) + " simplex " + std::to_string(x);
}

}  // namespace

SimplicialSet::SimplicialSet(int dim, std::vector<std::size_t> counts, Table faces,
                             Table degeneracies, std::vector<std::vector<std::string>> labels)
    : dim_(dim),
      counts_(std::move(counts)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      labels_(std::move(labels)) {
  if (dim_ < 0) throw InvalidArgument("negative dimension bound");
  if (counts_.size() != static_cast<std::size_t>(dim_ + 1))
    throw InvalidArgument("simplex counts must cover degrees 0.." + std::to_string(dim_));
  faces_.resize(static_cast<std::size_t>(dim_ + 1));
  degeneracies_.resize(static_cast<std::size_t>(dim_ + 1));
  for (int n = 1; n <= dim_; ++n) {
    auto& fn = faces_[n];
    if (fn.size() != static_cast<std::size_t>(n + 1))
      throw InvalidArgument("face table of degree " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " maps");
    for (auto& f : fn) {
      if (f.size() != counts_[n])
        throw InvalidArgument("face table size mismatch in degree " + std::to_string(n));
      for (std::size_t x = 0; x < f.size(); ++x)
        if (f[x] >= counts_[n - 1]) throw InvalidArgument("face out of range at " + where(n, x));
    }
  }
  for (int n = 0; n < dim_; ++n) {
    auto& sn = degeneracies_[n];
    if (sn.size() != static_cast<std::size_t>(n + 1))
      throw InvalidArgument("degeneracy table of degree " + std::to_string(n) + " needs " +
                            std::to_string(n + 1) + " maps");
    for (auto& s : sn) {
      if (s.size() != counts_[n])
        throw InvalidArgument("degeneracy table size mismatch in degree " + std::to_string(n));
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s[x] >= counts_[n + 1])
          throw InvalidArgument("degeneracy out of range at " + where(n, x));
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != counts_.size()) throw InvalidArgument("label table shape mismatch");
    for (int n = 0; n <= dim_; ++n)
      if (labels_[n].size() != counts_[n]) throw InvalidArgument("label table shape mismatch");
  }
  index();
}

void SimplicialSet::index() {
  const auto D = static_cast<std::size_t>(dim_ + 1);
  degenerate_.assign(D, {});
  roots_.assign(D, {});
  std::vector<std::vector<std::pair<int, Simplex>>> origin(D);
  for (std::size_t n = 0; n < D; ++n) {
    degenerate_[n].assign(counts_[n], false);
    origin[n].assign(counts_[n], {-1, 0});
  }
  for (int n = 0; n < dim_; ++n)
    for (int j = 0; j <= n; ++j)
      for (Simplex y = 0; y < counts_[n]; ++y) {
        Simplex x = degeneracies_[n][j][y];
        if (!degenerate_[n + 1][x]) {
          degenerate_[n + 1][x] = true;
          origin[n + 1][x] = {j, y};
        }
      }
  for (int n = 0; n <= dim_; ++n) {
    roots_[n].reserve(counts_[n]);
    for (Simplex x = 0; x < counts_[n]; ++x) {
      if (!degenerate_[n][x]) {
        roots_[n].push_back(Root{n, x, MonotoneMap::identity(n)});
      } else {
        auto [j, y] = origin[n][x];
        const Root& below = roots_[n - 1][y];
        roots_[n].push_back(
            Root{below.degree, below.simplex, compose(below.epi, MonotoneMap::codegeneracy(n - 1, j))});
      }
    }
  }
  coface_offsets_.assign(D, {});
  coface_data_.assign(D, {});
  for (int n = 1; n <= dim_; ++n) {
    coface_offsets_[n].resize(static_cast<std::size_t>(n + 1));
    coface_data_[n].resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
      auto& off = coface_offsets_[n][i];
      auto& data = coface_data_[n][i];
      off.assign(counts_[n - 1] + 1, 0);
      for (Simplex x = 0; x < counts_[n]; ++x) ++off[faces_[n][i][x] + 1];
      for (std::size_t y = 0; y < counts_[n - 1]; ++y) off[y + 1] += off[y];
      data.resize(counts_[n]);
      std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
      for (Simplex x = 0; x < counts_[n]; ++x) data[fill[faces_[n][i][x]]++] = x;
    }
  }
  if (!labels_.empty()) {
    label_index_.assign(D, {});
    for (int n = 0; n <= dim_; ++n)
      for (Simplex x = 0; x < counts_[n]; ++x) label_index_[n].emplace(labels_[n][x], x);
  }
}

std::size_t SimplicialSet::total_size() const {
  std::size_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

Simplex SimplicialSet::act(const MonotoneMap& op, Simplex x) const {
  const int n = op.target_dim();
  const int m = op.source_dim();
  if (n > dim_ || m > dim_)
    throw InsufficientTruncation("operator " + op.str() + " exceeds dimension bound " +
                                 std::to_string(dim_));
  auto [epi, mono] = op.epi_mono();
  // faces for every index missed by the image, largest first
  int cur = n;
  int r = mono.source_dim();
  int pos = r;
  for (int i = n; i >= 0; --i) {
    if (pos >= 0 && mono(pos) == i) {
      --pos;
      continue;
    }
    x = faces_[cur][i][x];
    --cur;
  }
  // degeneracies at every repeated position, left to right
  for (int j = 0; j < m; ++j) {
    if (epi(j) == epi(j + 1)) {
      x = degeneracies_[cur][j][x];
      ++cur;
    }
  }
  return x;
}

Simplex SimplicialSet::vertex(int n, Simplex x, int i) const {
  return act(MonotoneMap::constant(0, n, i), x);
}

std::vector<Simplex> SimplicialSet::nondegenerate(int n) const {
  std::vector<Simplex> out;
  for (Simplex x = 0; x < counts_[n]; ++x)
    if (!degenerate_[n][x]) out.push_back(x);
  return out;
}

int SimplicialSet::top_nondegenerate_degree() const {
  for (int n = dim_; n >= 0; --n)
    for (Simplex x = 0; x < counts_[n]; ++x)
      if (!degenerate_[n][x]) return n;
  return -1;
}

std::span<const Simplex> SimplicialSet::cofaces(int n, int i, Simplex y) const {
  const auto& off = coface_offsets_[n][i];
  const auto& data = coface_data_[n][i];
  return std::span<const Simplex>(data.data() + off[y], off[y + 1] - off[y]);
}

std::string SimplicialSet::label(int n, Simplex x) const {
  if (!labels_.empty()) return labels_[n][x];
  return "x" + std::to_string(n) + "_" + std::to_string(x);
}

std::optional<Simplex> SimplicialSet::find_label(int n, std::string_view label) const {
  if (n < 0 || n > dim_) return std::nullopt;
  if (labels_.empty()) {
    for (Simplex x = 0; x < counts_[n]; ++x)
      if (this->label(n, x) == label) return x;
    return std::nullopt;
  }
  auto it = label_index_[n].find(std::string(label));
  if (it == label_index_[n].end()) return std::nullopt;
  return it->second;
}

void SimplicialSet::declare_vertices(std::vector<std::vector<std::vector<Simplex>>> vertices) {
  declared_vertices_ = std::move(vertices);
}

std::size_t KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<Simplex> KeyedSet::find(int n, const Key& key) const {
  if (n < 0 || n >= static_cast<int>(index.size())) return std::nullopt;
  auto it = index[n].find(key);
  if (it == index[n].end()) return std::nullopt;
  return it->second;
}

Simplex KeyedSet::at(int n, const Key& key) const {
  auto r = find(n, key);
  if (!r) throw InvalidArgument("no simplex with the given key in degree " + std::to_string(n));
  return *r;
}

KeyedSet build_keyed(int dim, std::vector<std::vector<Key>> keys, const KeyAction& act,
                     const KeyLabel& label) {
  keys.resize(static_cast<std::size_t>(dim + 1));
  KeyedSet out;
  out.index.resize(static_cast<std::size_t>(dim + 1));
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) {
    auto& kn = keys[n];
    std::sort(kn.begin(), kn.end());
    kn.erase(std::unique(kn.begin(), kn.end()), kn.end());
    counts[n] = kn.size();
    out.index[n].reserve(kn.size());
    for (Simplex x = 0; x < kn.size(); ++x) out.index[n].emplace(kn[x], x);
  }
  auto lookup = [&](int n, const Key& k) {
    auto it = out.index[n].find(k);
    if (it == out.index[n].end())
      throw std::logic_error("keyed construction not closed under structure maps in degree " +
                             std::to_string(n));
    return it->second;
  };
  SimplicialSet::Table faces(static_cast<std::size_t>(dim + 1));
  SimplicialSet::Table degens(static_cast<std::size_t>(dim + 1));
  for (int n = 1; n <= dim; ++n) {
    faces[n].resize(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
      auto op = MonotoneMap::coface(n, i);
      faces[n][i].resize(counts[n]);
      for (Simplex x = 0; x < counts[n]; ++x) faces[n][i][x] = lookup(n - 1, act(op, keys[n][x]));
    }
  }
  for (int n = 0; n < dim; ++n) {
    degens[n].resize(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      auto op = MonotoneMap::codegeneracy(n, j);
      degens[n][j].resize(counts[n]);
      for (Simplex x = 0; x < counts[n]; ++x) degens[n][j][x] = lookup(n + 1, act(op, keys[n][x]));
    }
  }
  std::vector<std::vector<std::string>> labels;
  if (label) {
    labels.resize(static_cast<std::size_t>(dim + 1));
    for (int n = 0; n <= dim; ++n)
      for (const auto& k : keys[n]) labels[n].push_back(label(n, k));
  }
  out.set = std::make_shared<SimplicialSet>(dim, counts, std::move(faces), std::move(degens),
                                            std::move(labels));
  out.keys = std::move(keys);
  return out;
}

SSetPtr retruncate(const SSetPtr& s, int dim) {
  const int old = s->dim();
  if (dim == old) return s;
  if (dim < 0) throw InvalidArgument("negative dimension bound");
  if (dim < old) {
    auto counts = s->counts();
    counts.resize(static_cast<std::size_t>(dim + 1));
    SimplicialSet::Table faces(s->face_table().begin(), s->face_table().begin() + dim + 1);
    SimplicialSet::Table degens(s->degeneracy_table().begin(),
                                s->degeneracy_table().begin() + dim + 1);
    degens[dim].clear();
    std::vector<std::vector<std::string>> labels;
    if (s->has_labels())
      for (int n = 0; n <= dim; ++n) {
        labels.emplace_back();
        for (Simplex x = 0; x < s->size(n); ++x) labels.back().push_back(s->label(n, x));
      }
    return std::make_shared<SimplicialSet>(dim, counts, std::move(faces), std::move(degens),
                                           std::move(labels));
  }
  // Simplices above the old bound are pairs (nondegenerate z, surjection [n] -> [deg z]).
  struct Degenerate {
    int degree;
    Simplex z;
    MonotoneMap epi;
  };
  std::vector<std::vector<Degenerate>> extra(static_cast<std::size_t>(dim + 1));
  using ExtraKey = std::tuple<int, Simplex, std::vector<int>>;
  std::vector<std::map<ExtraKey, Simplex>> extra_index(static_cast<std::size_t>(dim + 1));
  for (int n = old + 1; n <= dim; ++n) {
    std::vector<std::pair<std::pair<int, Simplex>, MonotoneMap>> items;
    for (int r = 0; r <= old; ++r)
      for (Simplex z : s->nondegenerate(r))
        for (auto& e : MonotoneMap::all(n, r))
          if (e.surjective()) items.push_back({{r, z}, e});
    std::sort(items.begin(), items.end());
    for (auto& [rz, e] : items) {
      extra_index[n].emplace(ExtraKey{rz.first, rz.second, e.values()},
                             static_cast<Simplex>(extra[n].size()));
      extra[n].push_back(Degenerate{rz.first, rz.second, e});
    }
  }
  // Resolve z . op for an arbitrary operator into the extended set.
  auto resolve = [&](Simplex z, const MonotoneMap& op) -> Simplex {
    auto [epi, mono] = op.epi_mono();
    Simplex w = s->act(mono, z);
    const auto& rt = s->root(mono.source_dim(), w);
    MonotoneMap total = compose(rt.epi, epi);
    int m = op.source_dim();
    if (m <= old) return s->act(total, rt.simplex);
    return extra_index[m].at(ExtraKey{rt.degree, rt.simplex, total.values()});
  };
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n) counts[n] = n <= old ? s->size(n) : extra[n].size();
  SimplicialSet::Table faces(s->face_table());
  SimplicialSet::Table degens(s->degeneracy_table());
  faces.resize(static_cast<std::size_t>(dim + 1));
  degens.resize(static_cast<std::size_t>(dim + 1));
  // degeneracies out of the old top degree
  degens[old].assign(static_cast<std::size_t>(old + 1), std::vector<Simplex>(s->size(old)));
  for (int j = 0; j <= old; ++j)
    for (Simplex x = 0; x < s->size(old); ++x) {
      const auto& rt = s->root(old, x);
      degens[old][j][x] =
          resolve(rt.simplex, compose(rt.epi, MonotoneMap::codegeneracy(old, j)));
    }
  for (int n = old + 1; n <= dim; ++n) {
    faces[n].assign(static_cast<std::size_t>(n + 1), std::vector<Simplex>(counts[n]));
    for (int i = 0; i <= n; ++i)
      for (Simplex x = 0; x < counts[n]; ++x) {
        const auto& d = extra[n][x];
        faces[n][i][x] = resolve(d.z, compose(d.epi, MonotoneMap::coface(n, i)));
      }
    if (n < dim) {
      degens[n].assign(static_cast<std::size_t>(n + 1), std::vector<Simplex>(counts[n]));
      for (int j = 0; j <= n; ++j)
        for (Simplex x = 0; x < counts[n]; ++x) {
          const auto& d = extra[n][x];
          degens[n][j][x] = resolve(d.z, compose(d.epi, MonotoneMap::codegeneracy(n, j)));
        }
    }
  }
  std::vector<std::vector<std::string>> labels;
  if (s->has_labels()) {
    for (int n = 0; n <= dim; ++n) {
      labels.emplace_back();
      if (n <= old) {
        for (Simplex x = 0; x < s->size(n); ++x) labels.back().push_back(s->label(n, x));
      } else {
        for (const auto& d : extra[n]) {
          std::string l = s->label(d.degree, d.z) + "*";
          for (int v : d.epi.values()) l += std::to_string(v);
          labels.back().push_back(std::move(l));
        }
      }
    }
  }
  return std::make_shared<SimplicialSet>(dim, std::move(counts), std::move(faces), std::move(degens),
                                         std::move(labels));
}

}  // namespace hgc
