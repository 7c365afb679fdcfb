#include "hgc/marked/marked_set.hpp"

#include "hgc/scat/errors.hpp"

namespace hgc {

namespace {

std::vector<bool> degenerate_edges(const SimplicialSet& s) {
  std::vector<bool> m;
  if (s.dim() >= 1)
    for (Simplex e = 0; e < s.size(1); ++e) m.push_back(s.degenerate(1, e));
  return m;
}

std::vector<bool> pair_marking(const Cone& c, const MarkedSimplicialSet& a, const MarkedSimplicialSet& b) {
  std::vector<bool> m;
  if (c.object.set->dim() >= 1)
    for (const auto& k : c.object.keys[1])
      m.push_back(a.marked[static_cast<Simplex>(k[0])] && b.marked[static_cast<Simplex>(k[1])]);
  return m;
}

}  // namespace

std::vector<Simplex> MarkedSimplicialSet::marked_edges() const {
  std::vector<Simplex> out;
  for (Simplex e = 0; e < marked.size(); ++e)
    if (marked[e]) out.push_back(e);
  return out;
}

ValidationReport validate(const MarkedSimplicialSet& x) {
  ValidationReport r;
  const std::size_t edges = x.set->dim() >= 1 ? x.set->size(1) : 0;
  if (x.marked.size() != edges) {
    r.add("marking shape", "expected one flag per edge");
    return r;
  }
  for (Simplex e = 0; e < edges; ++e)
    if (x.set->degenerate(1, e) && !x.marked[e])
      r.add("degenerate edges marked", "edge " + x.set->label(1, e));
  return r;
}

MarkedSimplicialSet flat(const SSetPtr& s) { return {s, degenerate_edges(*s)}; }

MarkedSimplicialSet sharp(const SSetPtr& s) {
  return {s, std::vector<bool>(s->dim() >= 1 ? s->size(1) : 0, true)};
}

MarkedSimplicialSet marked_with(const SSetPtr& s, const std::vector<Simplex>& edges) {
  auto x = flat(s);
  for (Simplex e : edges) {
    if (e >= x.marked.size()) throw InvalidArgument("marked edge out of range");
    x.marked[e] = true;
  }
  return x;
}

ValidationReport validate(const MarkedMap& f) {
  ValidationReport r = validate(f.map);
  if (f.map.source() != f.source.set || f.map.target() != f.target.set)
    r.add("marked map endpoints", "underlying map does not match the marked sets");
  else if (f.source.set->dim() >= 1)
    for (Simplex e = 0; e < f.source.set->size(1); ++e)
      if (f.source.marked[e] && !f.target.marked[f.map(1, e)])
        r.add("f(E) in E'", "edge " + f.source.set->label(1, e));
  return r;
}

MarkedCone marked_product(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b) {
  auto c = product(a.set, b.set);
  MarkedSimplicialSet obj{c.object.set, pair_marking(c, a, b)};
  return MarkedCone{std::move(obj), std::move(c)};
}

MarkedCone marked_pullback(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b,
                           const SimplicialMap& f, const SimplicialMap& g) {
  auto c = pullback(f, g);
  MarkedSimplicialSet obj{c.object.set, pair_marking(c, a, b)};
  return MarkedCone{std::move(obj), std::move(c)};
}

}  // namespace hgc
