#include "hgc/scat/standard.hpp"

#include <set>

#include "hgc/scat/errors.hpp"

namespace hgc {

namespace {

Key precompose(const MonotoneMap& op, const Key& k) {
  Key out(static_cast<std::size_t>(op.source_dim() + 1));
  for (int i = 0; i <= op.source_dim(); ++i) out[i] = k[static_cast<std::size_t>(op(i))];
  return out;
}

std::string digits(int, const Key& k) {
  std::string s;
  for (auto v : k) s += std::to_string(v);
  return s;
}

void check_dim(int n, int dim) {
  if (n < 0) throw InvalidArgument("negative simplex dimension");
  if (dim < 0) throw InvalidArgument("negative dimension bound");
}

template <class Keep>
KeyedSet delta_subcomplex(int n, int dim, Keep keep) {
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int k = 0; k <= dim; ++k)
    for (const auto& m : MonotoneMap::all(k, n)) {
      Key key(m.values().begin(), m.values().end());
      std::set<int> image(key.begin(), key.end());
      if (keep(image)) keys[k].push_back(std::move(key));
    }
  return build_keyed(dim, std::move(keys), precompose, digits);
}

}  // namespace

namespace standard {

KeyedSet delta(int n, int dim) {
  check_dim(n, dim);
  return delta_subcomplex(n, dim, [](const std::set<int>&) { return true; });
}

KeyedSet horn(int n, int i, int dim) {
  check_dim(n, dim);
  if (n < 1 || i < 0 || i > n)
    throw InvalidArgument("horn(" + std::to_string(n) + ", " + std::to_string(i) +
                          ") needs n >= 1 and 0 <= i <= n");
  return delta_subcomplex(n, dim, [n, i](const std::set<int>& image) {
    // contained in d_j for some j != i, i.e. misses some vertex other than i
    for (int j = 0; j <= n; ++j)
      if (j != i && !image.count(j)) return true;
    return false;
  });
}

KeyedSet boundary(int n, int dim) {
  check_dim(n, dim);
  return delta_subcomplex(n, dim,
                          [n](const std::set<int>& image) { return static_cast<int>(image.size()) <= n; });
}

KeyedSet J(int dim) {
  check_dim(0, dim);
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int k = 0; k <= dim; ++k)
    for (std::uint32_t bits = 0; bits < (1u << (k + 1)); ++bits) {
      Key key(static_cast<std::size_t>(k + 1));
      // most significant position first so ids follow lexicographic order
      for (int p = 0; p <= k; ++p) key[p] = static_cast<int>((bits >> (k - p)) & 1u);
      keys[k].push_back(std::move(key));
    }
  return build_keyed(dim, std::move(keys), precompose, digits);
}

SimplicialMap keyed_inclusion(const KeyedSet& sub, const KeyedSet& super) {
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(sub.set->dim() + 1));
  for (int n = 0; n <= sub.set->dim(); ++n)
    for (const auto& k : sub.keys[n]) c[n].push_back(super.at(n, k));
  return SimplicialMap(sub.set, super.set, std::move(c));
}

}  // namespace standard

Object chain_object(const FiniteCategory& c, const Key& chain, int k) {
  return k == 0 ? chain[0] : c.target(chain[static_cast<std::size_t>(k)]);
}

Morphism chain_composite(const FiniteCategory& c, const Key& chain, int i, int j) {
  Morphism f = c.identity(chain_object(c, chain, i));
  for (int k = i + 1; k <= j; ++k) {
    f = c.compose(chain[static_cast<std::size_t>(k)], f);
    if (f < 0) throw InvalidArgument("composition table is missing a composable pair");
  }
  return f;
}

Key act_on_chain(const FiniteCategory& c, const MonotoneMap& op, const Key& chain) {
  Key out;
  out.reserve(static_cast<std::size_t>(op.source_dim() + 1));
  out.push_back(chain_object(c, chain, op(0)));
  for (int k = 1; k <= op.source_dim(); ++k) out.push_back(chain_composite(c, chain, op(k - 1), op(k)));
  return out;
}

Nerve::Nerve(CategoryPtr category, int dim) : category_(std::move(category)) {
  if (dim < 0) throw InvalidArgument("negative dimension bound");
  const auto& c = *category_;
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (Object d = 0; d < c.num_objects(); ++d) keys[0].push_back({d});
  for (int n = 1; n <= dim; ++n)
    for (const auto& prev : keys[n - 1]) {
      Object last = chain_object(c, prev, n - 1);
      for (Morphism f = 0; f < c.num_morphisms(); ++f)
        if (c.source(f) == last) {
          Key k = prev;
          k.push_back(f);
          keys[n].push_back(std::move(k));
        }
    }
  auto act = [&c](const MonotoneMap& op, const Key& k) { return act_on_chain(c, op, k); };
  auto label = [&c](int n, const Key& k) {
    if (n == 0) return c.object_name(k[0]);
    std::string s;
    for (int i = 1; i <= n; ++i) {
      if (i > 1) s += ",";
      s += c.morphism_name(k[static_cast<std::size_t>(i)]);
    }
    return s;
  };
  keyed_ = build_keyed(dim, std::move(keys), act, label);
}

Object Nerve::object(int n, Simplex x, int k) const {
  return chain_object(*category_, keyed_.key(n, x), k);
}

Morphism Nerve::arrow(int n, Simplex x, int k) const {
  return keyed_.key(n, x)[static_cast<std::size_t>(k)];
}

Morphism Nerve::composite(int n, Simplex x, int i, int j) const {
  return chain_composite(*category_, keyed_.key(n, x), i, j);
}

Simplex Nerve::degenerate_on(Object d, int n) const {
  Key k{d};
  for (int i = 0; i < n; ++i) k.push_back(category_->identity(d));
  return keyed_.at(n, k);
}

Simplex Nerve::edge_of(Morphism f) const {
  return keyed_.at(1, {category_->source(f), f});
}

}  // namespace hgc
