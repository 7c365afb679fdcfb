#include "hgc/scat/validate.hpp"

#include <functional>

namespace hgc {

namespace {

std::string at(int n, Simplex x) { return "degree " + std::to_string(n) + " simplex " + std::to_string(x); }

// Checks the horizontal (or any) simplicial identities for structure maps given
// as callables face(n, i, x) and degen(n, j, x) on a graded set of sizes size(n).
void identities(int dim, const std::function<std::size_t(int)>& size,
                const std::function<Simplex(int, int, Simplex)>& d,
                const std::function<Simplex(int, int, Simplex)>& s, ValidationReport& r) {
  for (int n = 2; n <= dim; ++n)
    for (Simplex x = 0; x < size(n); ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
            r.add("d_i d_j = d_{j-1} d_i", at(n, x) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
  for (int n = 0; n < dim; ++n)
    for (Simplex x = 0; x < size(n); ++x)
      for (int j = 0; j <= n; ++j) {
        Simplex y = s(n, j, x);
        for (int i = 0; i <= n + 1; ++i) {
          Simplex lhs = d(n + 1, i, y);
          Simplex rhs;
          const char* rule;
          if (i < j) {
            rhs = s(n - 1, j - 1, d(n, i, x));
            rule = "d_i s_j = s_{j-1} d_i";
          } else if (i == j || i == j + 1) {
            rhs = x;
            rule = "d_j s_j = d_{j+1} s_j = id";
          } else {
            rhs = s(n - 1, j, d(n, i - 1, x));
            rule = "d_i s_j = s_j d_{i-1}";
          }
          if (lhs != rhs) r.add(rule, at(n, x) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
        if (n + 1 < dim)
          for (int i = 0; i <= j; ++i)
            if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)))
              r.add("s_i s_j = s_{j+1} s_i", at(n, x) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
}

}  // namespace

void ValidationReport::add(std::string rule, std::string where) {
  ++total;
  if (violations.size() < kMaxListed) violations.push_back({std::move(rule), std::move(where)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  total += other.total;
  for (const auto& v : other.violations)
    if (violations.size() < kMaxListed) violations.push_back({v.rule, prefix + v.where});
}

ValidationReport validate(const SimplicialSet& s) {
  ValidationReport r;
  identities(
      s.dim(), [&](int n) { return s.size(n); },
      [&](int n, int i, Simplex x) { return s.face(n, i, x); },
      [&](int n, int j, Simplex x) { return s.degeneracy(n, j, x); }, r);
  for (int n = 0; n < s.dim(); ++n)
    for (int j = 0; j <= n; ++j) {
      std::vector<bool> seen(s.size(n + 1), false);
      for (Simplex x = 0; x < s.size(n); ++x) {
        Simplex y = s.degeneracy(n, j, x);
        if (seen[y]) r.add("s_j injective", at(n, x) + " j=" + std::to_string(j));
        seen[y] = true;
      }
    }
  const auto& declared = s.declared_vertices();
  for (int n = 1; n < static_cast<int>(declared.size()) && n <= s.dim(); ++n)
    for (Simplex x = 0; x < declared[n].size() && x < s.size(n); ++x) {
      const auto& vs = declared[n][x];
      if (vs.empty()) continue;
      if (static_cast<int>(vs.size()) != n + 1) {
        r.add("declared vertices", at(n, x) + " lists " + std::to_string(vs.size()) + " vertices");
        continue;
      }
      for (int i = 0; i <= n; ++i)
        if (s.vertex(n, x, i) != vs[i])
          r.add("declared vertices", at(n, x) + " vertex " + std::to_string(i));
    }
  return r;
}

ValidationReport validate(const FiniteCategory& c) {
  ValidationReport r;
  const int nm = c.num_morphisms();
  for (Object d = 0; d < c.num_objects(); ++d) {
    auto id = c.identity(d);
    if (c.source(id) != d || c.target(id) != d) r.add("identity endpoints", c.object_name(d));
  }
  for (Morphism g = 0; g < nm; ++g)
    for (Morphism f = 0; f < nm; ++f) {
      Morphism gf = c.compose(g, f);
      bool composable = c.target(f) == c.source(g);
      if (composable && gf < 0) r.add("composition total", c.morphism_name(g) + " o " + c.morphism_name(f));
      if (!composable && gf >= 0) r.add("composition on non-composable pair", c.morphism_name(g) + " o " + c.morphism_name(f));
      if (composable && gf >= 0 && (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)))
        r.add("composite endpoints", c.morphism_name(g) + " o " + c.morphism_name(f));
    }
  for (Morphism f = 0; f < nm; ++f) {
    if (c.compose(c.identity(c.target(f)), f) != f) r.add("left unit", c.morphism_name(f));
    if (c.compose(f, c.identity(c.source(f))) != f) r.add("right unit", c.morphism_name(f));
  }
  for (Morphism h = 0; h < nm; ++h)
    for (Morphism g = 0; g < nm; ++g) {
      if (c.target(g) != c.source(h)) continue;
      for (Morphism f = 0; f < nm; ++f) {
        if (c.target(f) != c.source(g)) continue;
        Morphism hg = c.compose(h, g);
        Morphism gf = c.compose(g, f);
        if (hg < 0 || gf < 0) continue;
        if (c.compose(hg, f) != c.compose(h, gf))
          r.add("associativity", c.morphism_name(h) + ", " + c.morphism_name(g) + ", " + c.morphism_name(f));
      }
    }
  return r;
}

ValidationReport validate(const SimplicialMap& f) {
  ValidationReport r;
  const auto& a = *f.source();
  const auto& b = *f.target();
  for (int n = 1; n <= a.dim(); ++n)
    for (Simplex x = 0; x < a.size(n); ++x)
      for (int i = 0; i <= n; ++i)
        if (f(n - 1, a.face(n, i, x)) != b.face(n, i, f(n, x)))
          r.add("f d_i = d_i f", at(n, x) + " i=" + std::to_string(i));
  for (int n = 0; n < a.dim(); ++n)
    for (Simplex x = 0; x < a.size(n); ++x)
      for (int j = 0; j <= n; ++j)
        if (f(n + 1, a.degeneracy(n, j, x)) != b.degeneracy(n, j, f(n, x)))
          r.add("f s_j = s_j f", at(n, x) + " j=" + std::to_string(j));
  return r;
}

ValidationReport validate(const BisimplicialSet& b) {
  ValidationReport r;
  const int M = b.horizontal_dim();
  for (int m = 0; m <= M; ++m) {
    if (b.rows[m]->dim() != b.vertical_dim()) r.add("uniform vertical bound", "row " + std::to_string(m));
    r.merge(validate(*b.rows[m]), "row " + std::to_string(m) + ": ");
  }
  if (static_cast<int>(b.horizontal_faces.size()) != M + 1 ||
      static_cast<int>(b.horizontal_degeneracies.size()) != M + 1) {
    r.add("horizontal table shape", "expected one entry per row");
    return r;
  }
  for (int m = 1; m <= M; ++m)
    for (int i = 0; i <= m; ++i)
      r.merge(validate(b.horizontal_faces[m][i]), "d^h_" + std::to_string(i) + " row " + std::to_string(m) + ": ");
  for (int m = 0; m < M; ++m)
    for (int j = 0; j <= m; ++j)
      r.merge(validate(b.horizontal_degeneracies[m][j]),
              "s^h_" + std::to_string(j) + " row " + std::to_string(m) + ": ");
  // horizontal identities, column by column
  for (int n = 0; n <= b.vertical_dim(); ++n) {
    ValidationReport col;
    identities(
        M, [&](int m) { return b.rows[m]->size(n); },
        [&](int m, int i, Simplex x) { return b.horizontal_faces[m][i](n, x); },
        [&](int m, int j, Simplex x) { return b.horizontal_degeneracies[m][j](n, x); }, col);
    r.merge(col, "column " + std::to_string(n) + ": ");
  }
  return r;
}

ValidationReport validate(const Functor& f) {
  ValidationReport r;
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (static_cast<int>(f.on_objects.size()) != a.num_objects() ||
      static_cast<int>(f.on_morphisms.size()) != a.num_morphisms()) {
    r.add("functor shape", "object or morphism table has the wrong size");
    return r;
  }
  for (Morphism m = 0; m < a.num_morphisms(); ++m) {
    Morphism fm = f.on_morphisms[m];
    if (b.source(fm) != f.on_objects[a.source(m)] || b.target(fm) != f.on_objects[a.target(m)])
      r.add("functor preserves endpoints", a.morphism_name(m));
  }
  for (Object d = 0; d < a.num_objects(); ++d)
    if (f.on_morphisms[a.identity(d)] != b.identity(f.on_objects[d]))
      r.add("functor preserves identities", a.object_name(d));
  for (Morphism g = 0; g < a.num_morphisms(); ++g)
    for (Morphism h = 0; h < a.num_morphisms(); ++h) {
      Morphism gh = a.compose(g, h);
      if (gh < 0) continue;
      if (f.on_morphisms[gh] != b.compose(f.on_morphisms[g], f.on_morphisms[h]))
        r.add("functor preserves composites", a.morphism_name(g) + " o " + a.morphism_name(h));
    }
  return r;
}

ValidationReport check_isomorphism(const SimplicialMap& f) {
  ValidationReport r = validate(f);
  for (int n = 0; n <= f.source()->dim(); ++n) {
    if (f.source()->size(n) != f.target()->size(n)) {
      r.add("bijective", "degree " + std::to_string(n) + " sizes " + std::to_string(f.source()->size(n)) +
                             " vs " + std::to_string(f.target()->size(n)));
      continue;
    }
    std::vector<bool> seen(f.target()->size(n), false);
    for (Simplex y : f.component(n)) {
      if (seen[y]) {
        r.add("bijective", "degree " + std::to_string(n) + " repeats simplex " + std::to_string(y));
        break;
      }
      seen[y] = true;
    }
  }
  if (f.source()->dim() != f.target()->dim()) r.add("bijective", "dimension bounds differ");
  return r;
}

}  // namespace hgc
