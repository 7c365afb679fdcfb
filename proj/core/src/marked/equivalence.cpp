#include "hgc/marked/equivalence.hpp"

#include <map>
#include <tuple>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/union_find.hpp"

namespace hgc {

namespace {

void need_two(const SimplicialSet& s) {
  if (s.dim() < 2)
    throw InsufficientTruncation("equivalence edges need 2-simplices (dimension bound >= 2)");
}

}  // namespace

std::optional<EquivalenceWitness> find_witness(const SimplicialSet& s, Simplex y) {
  need_two(s);
  const Simplex a = s.face(1, 1, y);
  const Simplex b = s.face(1, 0, y);
  const Simplex unit_a = s.degeneracy(0, 0, a);
  const Simplex unit_b = s.degeneracy(0, 0, b);
  std::optional<EquivalenceWitness> best;
  auto better = [&](const EquivalenceWitness& w) {
    return !best || std::tie(w.inverse, w.sigma, w.beta) < std::tie(best->inverse, best->sigma, best->beta);
  };
  for (Simplex sigma : s.cofaces(2, 2, y)) {
    if (s.face(2, 1, sigma) != unit_a) continue;
    const Simplex inverse = s.face(2, 0, sigma);
    for (Simplex beta : s.cofaces(2, 0, y)) {
      if (s.face(2, 2, beta) != inverse || s.face(2, 1, beta) != unit_b) continue;
      EquivalenceWitness w{y, inverse, sigma, beta};
      if (better(w)) best = w;
      break;  // betas arrive in increasing order
    }
  }
  return best;
}

bool is_witness(const SimplicialSet& s, const EquivalenceWitness& w) {
  const Simplex a = s.face(1, 1, w.edge);
  const Simplex b = s.face(1, 0, w.edge);
  return s.face(2, 0, w.sigma) == w.inverse && s.face(2, 2, w.sigma) == w.edge &&
         s.face(2, 1, w.sigma) == s.degeneracy(0, 0, a) && s.face(2, 0, w.beta) == w.edge &&
         s.face(2, 2, w.beta) == w.inverse && s.face(2, 1, w.beta) == s.degeneracy(0, 0, b);
}

bool word_search_invertible(const SimplicialSet& s, Simplex y, int depth, Budget* budget) {
  need_two(s);
  if (s.degenerate(1, y)) return true;
  // paths of nondegenerate edges, keyed by (start vertex, edges)
  using Path = std::vector<std::int64_t>;
  std::map<Path, std::uint32_t> ids;
  std::vector<Path> paths;
  std::vector<std::vector<Simplex>> out_edges(s.size(0));
  for (Simplex e = 0; e < s.size(1); ++e)
    if (!s.degenerate(1, e)) out_edges[s.face(1, 1, e)].push_back(e);
  auto end_of = [&](const Path& p) {
    return p.size() == 1 ? static_cast<Simplex>(p[0]) : s.face(1, 0, static_cast<Simplex>(p.back()));
  };
  std::vector<Path> frontier;
  for (Simplex v = 0; v < s.size(0); ++v) frontier.push_back({v});
  for (int len = 0; len <= depth; ++len) {
    std::vector<Path> next;
    for (auto& p : frontier) {
      charge(budget);
      ids.emplace(p, static_cast<std::uint32_t>(paths.size()));
      paths.push_back(p);
      if (len == depth) continue;
      for (Simplex e : out_edges[end_of(p)]) {
        Path q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  UnionFind uf(paths.size());
  // nondegenerate part of a 2-simplex relation: [d2][d0] ~ [d1]
  auto part = [&](Simplex e) { return s.degenerate(1, e) ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{e}; };
  for (const auto& p : paths) {
    const auto len = p.size() - 1;
    for (std::size_t i = 0; i <= len; ++i) {
      Simplex v = i == 0 ? static_cast<Simplex>(p[0]) : s.face(1, 0, static_cast<Simplex>(p[i]));
      for (Simplex sigma = 0; sigma < s.size(2); ++sigma) {
        charge(budget);
        if (s.vertex(2, sigma, 0) != v) continue;
        auto lhs = part(s.face(2, 2, sigma));
        auto l0 = part(s.face(2, 0, sigma));
        lhs.insert(lhs.end(), l0.begin(), l0.end());
        if (i + lhs.size() > len) continue;
        if (!std::equal(lhs.begin(), lhs.end(), p.begin() + static_cast<std::ptrdiff_t>(i + 1))) continue;
        Path q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i + 1));
        auto rhs = part(s.face(2, 1, sigma));
        q.insert(q.end(), rhs.begin(), rhs.end());
        q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(i + 1 + lhs.size()), p.end());
        if (auto it = ids.find(q); it != ids.end()) uf.unite(ids.at(p), it->second);
      }
    }
  }
  const Simplex a = s.face(1, 1, y);
  const Simplex b = s.face(1, 0, y);
  const auto id_a = uf.find(ids.at({a}));
  const auto id_b = uf.find(ids.at({b}));
  for (const auto& w : paths) {
    if (w[0] != b || end_of(w) != a) continue;
    Path yw{a, y};
    yw.insert(yw.end(), w.begin() + 1, w.end());
    Path wy = w;
    wy.push_back(y);
    auto i1 = ids.find(yw);
    auto i2 = ids.find(wy);
    if (i1 != ids.end() && i2 != ids.end() && uf.find(i1->second) == id_a && uf.find(i2->second) == id_b)
      return true;
  }
  return false;
}

EquivalenceVerdict is_equivalence_edge(const SimplicialSet& s, Simplex y, int witness_depth, Budget* budget) {
  EquivalenceVerdict v;
  v.witness = find_witness(s, y);
  v.equivalence = v.witness.has_value();
  if (witness_depth > 0) v.word_search = word_search_invertible(s, y, witness_depth, budget);
  return v;
}

MarkedSimplicialSet mark_equivalences(const SSetPtr& s) {
  need_two(*s);
  MarkedSimplicialSet x{s, std::vector<bool>(s->size(1), false)};
  for (Simplex e = 0; e < s->size(1); ++e) x.marked[e] = find_witness(*s, e).has_value();
  return x;
}

Subcomplex core(const SSetPtr& s) {
  auto e = mark_equivalences(s);
  std::vector<std::vector<bool>> keep(static_cast<std::size_t>(s->dim() + 1));
  for (int n = 0; n <= s->dim(); ++n) {
    keep[n].assign(s->size(n), true);
    if (n == 0) continue;
    for (Simplex x = 0; x < s->size(n); ++x)
      for (int i = 0; i <= n && keep[n][x]; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!e.marked[s->act(MonotoneMap::inclusion({i, j}, n), x)]) {
            keep[n][x] = false;
            break;
          }
  }
  return subcomplex(s, keep);
}

}  // namespace hgc
