#include "hgc/grothendieck/relative_nerve.hpp"

#include <stdexcept>

#include "hgc/scat/errors.hpp"
#include "hgc/scat/limits.hpp"

namespace hgc {

namespace {

std::vector<int> elements(unsigned mask) {
  std::vector<int> out;
  for (int b = 0; mask >> b; ++b)
    if (mask >> b & 1U) out.push_back(b);
  return out;
}

/// Positions of the elements of `inner` within `outer` (inner a subset of outer).
std::vector<int> positions(unsigned inner, unsigned outer) {
  std::vector<int> out;
  int pos = 0;
  for (int b = 0; outer >> b; ++b)
    if (outer >> b & 1U) {
      if (inner >> b & 1U) out.push_back(pos);
      ++pos;
    }
  return out;
}

unsigned full_mask(int n) { return (1U << (n + 1)) - 1; }

std::string family_label(const Nerve& nerve, const Diagram& f, int n, const Key& k) {
  const auto sigma = static_cast<Simplex>(k[0]);
  std::string s = "(" + nerve.set()->label(n, sigma) + ";";
  for (int j = 0; j <= n; ++j) {
    if (j > 0) s += ",";
    s += f.value(nerve.object(n, sigma, j))->label(j, static_cast<Simplex>(k[full_mask(j)]));
  }
  return s + ")";
}

}  // namespace

ValidationReport check_relative_simplex(const Diagram& f, const Nerve& nerve, int n, const Key& key) {
  ValidationReport r;
  const unsigned top = full_mask(n);
  if (key.size() != static_cast<std::size_t>(top) + 1) {
    r.add("relative simplex shape", "expected " + std::to_string(top + 1) + " entries");
    return r;
  }
  const auto sigma = static_cast<Simplex>(key[0]);
  for (unsigned j_mask = 1; j_mask <= top; ++j_mask) {
    const auto js = elements(j_mask);
    const int j = js.back();
    const auto& vj = *f.value(nerve.object(n, sigma, j));
    const int deg_j = static_cast<int>(js.size()) - 1;
    if (key[j_mask] < 0 || static_cast<std::size_t>(key[j_mask]) >= vj.size(deg_j)) {
      r.add("relative simplex range", "tau(" + std::to_string(j_mask) + ")");
      continue;
    }
    for (unsigned i_mask = j_mask; i_mask; i_mask = (i_mask - 1) & j_mask) {
      const auto is = elements(i_mask);
      const int i = is.back();
      const int deg_i = static_cast<int>(is.size()) - 1;
      const auto lhs = f.map(nerve.composite(n, sigma, i, j))(deg_i, static_cast<Simplex>(key[i_mask]));
      const auto rhs = vj.act(MonotoneMap::inclusion(positions(i_mask, j_mask), deg_j), static_cast<Simplex>(key[j_mask]));
      if (lhs != rhs)
        r.add("relative simplex compatibility",
              "degree " + std::to_string(n) + " masks " + std::to_string(i_mask) + " in " + std::to_string(j_mask));
    }
  }
  return r;
}

RelativeNerve relative_nerve(const Diagram& f) {
  const int dim = f.dim();
  auto nerve = std::make_shared<Nerve>(f.base, dim);
  std::vector<std::vector<Key>> keys(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (Simplex sigma = 0; sigma < nerve->set()->size(n); ++sigma) {
      // gamma_j = tau([0..j]); the rest of the family is forced by restriction
      std::vector<Simplex> gamma(static_cast<std::size_t>(n + 1));
      auto emit = [&] {
        Key k(static_cast<std::size_t>(full_mask(n)) + 1);
        k[0] = static_cast<std::int32_t>(sigma);
        for (unsigned mask = 1; mask <= full_mask(n); ++mask) {
          const auto js = elements(mask);
          const int j = js.back();
          k[mask] = static_cast<std::int32_t>(
              f.value(nerve->object(n, sigma, j))->act(MonotoneMap::inclusion(js, j), gamma[j]));
        }
        auto report = check_relative_simplex(f, *nerve, n, k);
        if (!report.ok()) throw std::logic_error("relative nerve family violates " + report.violations.front().rule);
        keys[n].push_back(std::move(k));
      };
      auto extend = [&](auto&& self, int j) -> void {
        if (j > n) {
          emit();
          return;
        }
        const auto& vj = *f.value(nerve->object(n, sigma, j));
        auto fits = [&](Simplex c) {
          for (int i = 0; i + 1 < j; ++i) {
            std::vector<int> prefix(static_cast<std::size_t>(i + 1));
            for (int t = 0; t <= i; ++t) prefix[t] = t;
            if (vj.act(MonotoneMap::inclusion(prefix, j), c) != f.map(nerve->composite(n, sigma, i, j))(i, gamma[i]))
              return false;
          }
          return true;
        };
        if (j == 0) {
          for (Simplex c = 0; c < vj.size(0); ++c) {
            gamma[0] = c;
            self(self, 1);
          }
          return;
        }
        const Simplex last = f.map(nerve->arrow(n, sigma, j))(j - 1, gamma[j - 1]);
        for (Simplex c : vj.cofaces(j, j, last))
          if (fits(c)) {
            gamma[j] = c;
            self(self, j + 1);
          }
      };
      extend(extend, 0);
    }
  const auto& ns = *nerve->set();
  auto act = [&](const MonotoneMap& op, const Key& k) {
    const int n = op.target_dim();
    const int m = op.source_dim();
    const auto sigma = static_cast<Simplex>(k[0]);
    Key out(static_cast<std::size_t>(full_mask(m)) + 1);
    out[0] = static_cast<std::int32_t>(ns.act(op, sigma));
    for (unsigned mask = 1; mask <= full_mask(m); ++mask) {
      unsigned image = 0;
      for (int b : elements(mask)) image |= 1U << op(b);
      // theta|J : [|J|-1] -> [|theta(J)|-1]
      std::vector<int> values;
      for (int b : elements(mask)) values.push_back(positions(1U << op(b), image).front());
      const auto image_elems = elements(image);
      const int deg = static_cast<int>(image_elems.size()) - 1;
      const auto& v = *f.value(nerve->object(n, sigma, image_elems.back()));
      out[mask] = static_cast<std::int32_t>(v.act(MonotoneMap(values, deg), static_cast<Simplex>(k[image])));
    }
    return out;
  };
  auto label = [&](int n, const Key& k) { return family_label(*nerve, f, n, k); };
  RelativeNerve rn{nerve, build_keyed(dim, std::move(keys), act, label), SimplicialMap::identity(nerve->set())};
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : rn.object.keys[n]) c[n].push_back(static_cast<Simplex>(k[0]));
  rn.projection = SimplicialMap(rn.object.set, nerve->set(), std::move(c));
  return rn;
}

MarkedSimplicialSet marked_relative_nerve(const RelativeNerve& rn, const Diagram& f) {
  const auto& s = rn.object.set;
  std::vector<MarkedSimplicialSet> values;
  for (Object d = 0; d < f.base->num_objects(); ++d) values.push_back(f.marked_value(d));
  std::vector<bool> m;
  if (s->dim() >= 1)
    for (Simplex e = 0; e < s->size(1); ++e) {
      const Object d1 = rn.nerve->object(1, rn.sigma(1, e), 1);
      m.push_back(values[static_cast<std::size_t>(d1)].marked[rn.tau(1, e, 3)]);
    }
  return {s, std::move(m)};
}

std::string IsoReport::summary() const {
  if (ok()) return "bijective, degrees 0.." + std::to_string(max_degree);
  std::string s = "not an isomorphism:";
  if (!map) s += " incomplete map;";
  if (map && !bijective) s += " not bijective;";
  if (map && !natural) s += " not natural;";
  if (map && !over_base) s += " not over the base;";
  return s;
}

IsoReport canonical_iso(const Diagram& x, const TotalSpace& total, const RelativeNerve& rn) {
  IsoReport rep;
  const auto& ts = *total.object.set;
  const int dim = ts.dim();
  rep.max_degree = dim;
  if (rn.object.set->dim() != dim) {
    rep.details.push_back("dimension bounds differ");
    return rep;
  }
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  bool complete = true;
  for (int n = 0; n <= dim; ++n)
    for (Simplex t = 0; t < ts.size(n); ++t) {
      const auto sigma = total.sigma(n, t);
      Key k(static_cast<std::size_t>(full_mask(n)) + 1);
      k[0] = static_cast<std::int32_t>(sigma);
      for (unsigned mask = 1; mask <= full_mask(n); ++mask) {
        const auto js = elements(mask);
        const int j = js.back();
        k[mask] = static_cast<std::int32_t>(
            x.value(total.nerve->object(n, sigma, j))->act(MonotoneMap::inclusion(js, j), total.beta(n, t, j)));
      }
      auto found = rn.object.find(n, k);
      if (!found) {
        complete = false;
        rep.details.push_back("degree " + std::to_string(n) + ": " + ts.label(n, t) + " has no image");
        c[n].push_back(0);
      } else {
        c[n].push_back(*found);
      }
    }
  if (!complete) return rep;
  SimplicialMap m(total.object.set, rn.object.set, std::move(c));
  for (int n = 0; n <= dim; ++n)
    if (ts.size(n) != rn.object.set->size(n))
      rep.details.push_back("degree " + std::to_string(n) + ": " + std::to_string(ts.size(n)) + " vs " +
                            std::to_string(rn.object.set->size(n)) + " simplices");
  rep.bijective = m.bijective();
  auto nat = validate(m);
  rep.natural = nat.ok();
  for (const auto& v : nat.violations) rep.details.push_back(v.rule + ": " + v.where);
  rep.over_base = true;
  for (int n = 0; n <= dim && rep.over_base; ++n)
    for (Simplex t = 0; t < ts.size(n); ++t)
      if (rn.projection(n, m(n, t)) != total.projection(n, t)) {
        rep.over_base = false;
        rep.details.push_back("degree " + std::to_string(n) + ": projections disagree at " + ts.label(n, t));
        break;
      }
  rep.map = std::move(m);
  return rep;
}

SimplicialMap relative_fiber_map(const RelativeNerve& rn, const Diagram& f, Object d) {
  auto cone = fiber(rn.projection, 0, rn.nerve->vertex_of(d));
  const int dim = cone.object.set->dim();
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : cone.object.keys[n]) c[n].push_back(rn.tau(n, static_cast<Simplex>(k[1]), full_mask(n)));
  return SimplicialMap(cone.object.set, f.value(d), std::move(c));
}

SimplicialMap total_fiber_map(const TotalSpace& total, const Diagram& x, Object d) {
  auto cone = fiber(total.projection, 0, total.nerve->vertex_of(d));
  const int dim = cone.object.set->dim();
  std::vector<std::vector<Simplex>> c(static_cast<std::size_t>(dim + 1));
  for (int n = 0; n <= dim; ++n)
    for (const auto& k : cone.object.keys[n]) c[n].push_back(total.beta(n, static_cast<Simplex>(k[1]), n));
  return SimplicialMap(cone.object.set, x.value(d), std::move(c));
}

}  // namespace hgc
