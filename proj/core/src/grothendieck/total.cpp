#include "hgc/grothendieck/total.hpp"

#include "hgc/scat/errors.hpp"

namespace hgc {

namespace {

std::string chain_label(const Nerve& nerve, const Diagram& x, int n, const Key& k) {
  const auto sigma = static_cast<Simplex>(k[0]);
  std::string s = "(" + nerve.set()->label(n, sigma) + ";";
  for (int j = 0; j <= n; ++j) {
    if (j > 0) s += ",";
    s += x.value(nerve.object(n, sigma, j))->label(j, static_cast<Simplex>(k[static_cast<std::size_t>(j + 1)]));
  }
  return s + ")";
}

}  // namespace

TotalSpace grothendieck_total(const Diagram& x, Budget* budget) {
  GerbeContext ctx(x, 0, budget);
  const auto& nerve = ctx.nerve();
  const int dim = x.dim();
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex sigma = 0; sigma < nerve.set()->size(n); ++sigma) {
      auto g = gerbe(ctx, n, sigma);
      for (const auto& chain : g.chains[0]) {
        Key k{static_cast<std::int32_t>(sigma)};
        for (int j = 0; j <= n; ++j)
          k.push_back(static_cast<std::int32_t>(ctx.evaluate(j, nerve.object(n, sigma, j), chain[j])));
        keys[n].push_back(std::move(k));
      }
    }
  const auto& ns = *nerve.set();
  auto act = [&](const MonotoneMap& op, const Key& k) {
    const int n = op.target_dim();
    const auto sigma = static_cast<Simplex>(k[0]);
    Key out{static_cast<std::int32_t>(ns.act(op, sigma))};
    for (int j = 0; j <= op.source_dim(); ++j) {
      const int t = op(j);
      const auto& value = *x.value(nerve.object(n, sigma, t));
      out.push_back(static_cast<std::int32_t>(value.act(op.prefix(j), static_cast<Simplex>(k[static_cast<std::size_t>(t + 1)]))));
    }
    return out;
  };
  auto label = [&](int n, const Key& k) { return chain_label(nerve, x, n, k); };
  TotalSpace t{ctx.nerve_ptr(), build_keyed(dim, std::move(keys), act, label), SimplicialMap::identity(nerve.set())};
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : t.object.keys[n]) c[n].push_back(static_cast<Simplex>(k[0]));
  t.projection = SimplicialMap(t.object.set, nerve.set(), std::move(c));
  return t;
}

MarkedSimplicialSet marked_total(const TotalSpace& total, const Diagram& x) {
  const auto& s = total.object.set;
  std::vector<MarkedSimplicialSet> values;
  for (Object d = 0; d < x.base->num_objects(); ++d) values.push_back(x.marked_value(d));
  std::vector<bool> m;
  if (s->dim() >= 1)
    for (Simplex e = 0; e < s->size(1); ++e) {
      Object d1 = total.nerve->object(1, total.sigma(1, e), 1);
      m.push_back(values[static_cast<std::size_t>(d1)].marked[total.beta(1, e, 1)]);
    }
  return {s, std::move(m)};
}

GrothendieckSpace grothendieck_space(const Diagram& x, int max_row, int k_max, Budget* budget) {
  if (max_row < 0 || max_row + k_max > x.dim())
    throw InsufficientTruncation("Grothendieck space with rows up to " + std::to_string(max_row) +
                                 " and vertical degree " + std::to_string(k_max) +
                                 " exceeds dimension bound " + std::to_string(x.dim()));
  GerbeContext ctx(x, k_max, budget);
  const auto& nerve = ctx.nerve();
  GrothendieckSpace out{ctx.nerve_ptr(), {}, {}};
  for (int m = 0; m <= max_row; ++m) {
    std::vector<std::vector<Key>> keys(static_cast<std::size_t>(k_max + 1));
    for (Simplex sigma = 0; sigma < nerve.set()->size(m); ++sigma) {
      auto g = gerbe(ctx, m, sigma);
      for (int k = 0; k <= k_max; ++k)
        for (const auto& chain : g.chains[k]) {
          Key key{static_cast<std::int32_t>(sigma)};
          for (Simplex b : chain) key.push_back(static_cast<std::int32_t>(b));
          keys[k].push_back(std::move(key));
        }
    }
    auto act = [&, m](const MonotoneMap& op, const Key& key) {
      const auto sigma = static_cast<Simplex>(key[0]);
      Key res{key[0]};
      for (int j = 0; j <= m; ++j)
        res.push_back(static_cast<std::int32_t>(ctx.complex(j, nerve.object(m, sigma, j))
                                                    .set()
                                                    ->act(op, static_cast<Simplex>(key[static_cast<std::size_t>(j + 1)]))));
      return res;
    };
    out.rows.push_back(build_keyed(k_max, std::move(keys), act));
    out.space.rows.push_back(out.rows.back().set);
  }
  // horizontal operators: sigma.theta with beta_{theta(j)} restricted along theta|[0..j]
  auto horizontal = [&](int m, const MonotoneMap& theta) {
    const int target_row = theta.source_dim();
    std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(k_max + 1));
    for (int k = 0; k <= k_max; ++k)
      for (const auto& key : out.rows[m].keys[k]) {
        const auto sigma = static_cast<Simplex>(key[0]);
        Key res{static_cast<std::int32_t>(nerve.set()->act(theta, sigma))};
        for (int j = 0; j <= target_row; ++j) {
          const int t = theta(j);
          const auto& r = ctx.restriction(theta.prefix(j), nerve.object(m, sigma, t));
          res.push_back(static_cast<std::int32_t>(r(k, static_cast<Simplex>(key[static_cast<std::size_t>(t + 1)]))));
        }
        c[k].push_back(out.rows[target_row].at(k, res));
      }
    return SimplicialMap(out.rows[m].set, out.rows[target_row].set, std::move(c));
  };
  out.space.horizontal_faces.resize(static_cast<std::size_t>(max_row + 1));
  out.space.horizontal_degeneracies.resize(static_cast<std::size_t>(max_row + 1));
  for (int m = 1; m <= max_row; ++m)
    for (int i = 0; i <= m; ++i) out.space.horizontal_faces[m].push_back(horizontal(m, MonotoneMap::coface(m, i)));
  for (int m = 0; m < max_row; ++m)
    for (int j = 0; j <= m; ++j)
      out.space.horizontal_degeneracies[m].push_back(horizontal(m, MonotoneMap::codegeneracy(m, j)));
  return out;
}

ValidationReport compare_zeroth_column(const Diagram& x, const GrothendieckSpace& g, const TotalSpace& t,
                                       Budget* budget) {
  ValidationReport r;
  if (g.rows.empty()) return r;
  GerbeContext ctx(x, g.rows[0].set->dim(), budget);
  const auto& nerve = *g.nerve;
  for (int m = 0; m < static_cast<int>(g.rows.size()); ++m) {
    if (m > t.object.set->dim()) break;
    if (g.rows[m].set->size(0) != t.object.set->size(m)) {
      r.add("zeroth column", "row " + std::to_string(m) + " has " + std::to_string(g.rows[m].set->size(0)) +
                                 " vertices, total space has " + std::to_string(t.object.set->size(m)) +
                                 " simplices");
      continue;
    }
    std::vector<bool> hit(static_cast<std::size_t>(t.object.set->size(m)), false);
    for (Simplex v = 0; v < g.rows[m].set->size(0); ++v) {
      const auto& key = g.rows[m].key(0, v);
      const auto sigma = static_cast<Simplex>(key[0]);
      Key tk{key[0]};
      for (int j = 0; j <= m; ++j)
        tk.push_back(static_cast<std::int32_t>(
            ctx.evaluate(j, nerve.object(m, sigma, j), static_cast<Simplex>(key[static_cast<std::size_t>(j + 1)]))));
      auto found = t.object.find(m, tk);
      if (!found) {
        r.add("zeroth column", "row " + std::to_string(m) + " vertex " + std::to_string(v) + " has no total simplex");
        continue;
      }
      if (hit[*found]) r.add("zeroth column", "row " + std::to_string(m) + " vertex " + std::to_string(v) + " collides");
      hit[*found] = true;
    }
  }
  return r;
}

}  // namespace hgc
