#include "hgc/grothendieck/gerbe.hpp"

#include <numeric>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"

namespace hgc {

GerbeContext::GerbeContext(const Diagram& x, int k_max, Budget* budget)
    : x_(x), k_max_(k_max), budget_(budget), nerve_(std::make_shared<Nerve>(x.base, x.dim())) {
  if (k_max < 0) throw InvalidArgument("negative gerbe degree bound");
}

const KeyedSet& GerbeContext::delta(int j) {
  while (static_cast<int>(deltas_.size()) <= j)
    deltas_.push_back(standard::delta(static_cast<int>(deltas_.size()), x_.dim()));
  return deltas_[j];
}

const FunctionComplex& GerbeContext::complex(int j, Object d) {
  auto key = std::make_pair(j, d);
  auto it = complexes_.find(key);
  if (it != complexes_.end()) return *it->second;
  const int dim = x_.dim();
  if (j + k_max_ > dim)
    throw InsufficientTruncation("gerbe needs [Delta[" + std::to_string(j) + "], X(" +
                                 x_.base->object_name(d) + ")] up to degree " + std::to_string(k_max_) +
                                 ", beyond dimension bound " + std::to_string(dim));
  FunctionComplexOptions o;
  o.budget = budget_;
  auto fc = std::make_unique<FunctionComplex>(delta(j).set, x_.value(d), k_max_, o);
  return *complexes_.emplace(key, std::move(fc)).first->second;
}

const SimplicialMap& GerbeContext::restriction(const MonotoneMap& u, Object d) {
  auto key = std::make_pair(u, d);
  auto it = restrictions_.find(key);
  if (it != restrictions_.end()) return *it->second;
  const int a = u.target_dim();
  const int b = u.source_dim();
  const auto& from = complex(a, d);
  const auto& to = complex(b, d);
  Key values(u.values().begin(), u.values().end());
  auto cls = SimplicialMap::classifying(delta(b).set, delta(a).set, b, delta(a).at(b, values));
  auto m = std::make_unique<SimplicialMap>(precompose(from, to, cls));
  return *restrictions_.emplace(key, std::move(m)).first->second;
}

const SimplicialMap& GerbeContext::transport(int j, Morphism f) {
  auto key = std::make_pair(j, f);
  auto it = transports_.find(key);
  if (it != transports_.end()) return *it->second;
  const auto& from = complex(j, x_.base->source(f));
  const auto& to = complex(j, x_.base->target(f));
  auto m = std::make_unique<SimplicialMap>(postcompose(from, to, x_.map(f)));
  return *transports_.emplace(key, std::move(m)).first->second;
}

Simplex GerbeContext::evaluate(int j, Object d, Simplex vertex) {
  const auto& fc = complex(j, d);
  Key top(static_cast<std::size_t>(j + 1));
  std::iota(top.begin(), top.end(), 0);
  Simplex cell = fc.cylinder(0).object.at(j, {static_cast<std::int32_t>(delta(j).at(j, top)), 0});
  return fc.map_of(0, vertex)(j, cell);
}

Gerbe gerbe(GerbeContext& ctx, int n, Simplex sigma) {
  const auto& nerve = ctx.nerve();
  if (n < 0 || n > nerve.dim() || sigma >= nerve.set()->size(n))
    throw InvalidArgument("gerbe over a simplex outside the nerve");
  const int k_max = ctx.k_max();
  const auto& first = ctx.complex(0, nerve.object(n, sigma, 0));
  Gerbe g{0, sigma, first.set(), std::nullopt, SimplicialMap::identity(first.set()), {}};
  g.chains.resize(static_cast<std::size_t>(k_max + 1));
  for (int m = 0; m <= k_max; ++m)
    for (Simplex x = 0; x < first.set()->size(m); ++x) g.chains[m].push_back({x});
  for (int j = 1; j <= n; ++j) {
    const Morphism f = nerve.arrow(n, sigma, j);
    const Object dj = nerve.object(n, sigma, j);
    auto left = compose(ctx.transport(j - 1, f), g.p2);
    const auto& right = ctx.restriction(MonotoneMap::coface(j, j), dj);
    auto cone = pullback(left, right);
    std::vector<std::vector<std::vector<Simplex>>> chains(static_cast<std::size_t>(k_max + 1));
    for (int m = 0; m <= k_max; ++m)
      for (const auto& key : cone.object.keys[m]) {
        auto c = g.chains[m][static_cast<Simplex>(key[0])];
        c.push_back(static_cast<Simplex>(key[1]));
        chains[m].push_back(std::move(c));
      }
    g = Gerbe{j, sigma, cone.object.set, cone.first, cone.second, std::move(chains)};
  }
  return g;
}

}  // namespace hgc
