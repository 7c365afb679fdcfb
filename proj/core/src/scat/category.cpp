#include "hgc/scat/category.hpp"

#include <map>
#include <sstream>

#include "hgc/scat/errors.hpp"

namespace hgc {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Arrow> morphisms,
                               std::vector<Morphism> identities,
                               std::vector<std::vector<Morphism>> compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {
  const int no = num_objects();
  const int nm = num_morphisms();
  if (static_cast<int>(identities_.size()) != no)
    throw InvalidArgument("category needs one identity per object");
  for (const auto& a : morphisms_)
    if (a.source < 0 || a.source >= no || a.target < 0 || a.target >= no)
      throw InvalidArgument("morphism '" + a.name + "' has an unknown endpoint");
  for (auto i : identities_)
    if (i < 0 || i >= nm) throw InvalidArgument("identity out of range");
  if (static_cast<int>(compose_.size()) != nm)
    throw InvalidArgument("composition table must be square over morphisms");
  for (const auto& row : compose_) {
    if (static_cast<int>(row.size()) != nm)
      throw InvalidArgument("composition table must be square over morphisms");
    for (auto c : row)
      if (c < -1 || c >= nm) throw InvalidArgument("composition table entry out of range");
  }
}

std::optional<Object> FiniteCategory::find_object(const std::string& name) const {
  for (Object d = 0; d < num_objects(); ++d)
    if (objects_[d] == name) return d;
  return std::nullopt;
}

std::optional<Morphism> FiniteCategory::find_morphism(const std::string& name) const {
  for (Morphism f = 0; f < num_morphisms(); ++f)
    if (morphisms_[f].name == name) return f;
  return std::nullopt;
}

std::vector<Morphism> FiniteCategory::hom(Object d, Object e) const {
  std::vector<Morphism> out;
  for (Morphism f = 0; f < num_morphisms(); ++f)
    if (morphisms_[f].source == d && morphisms_[f].target == e) out.push_back(f);
  return out;
}

CategoryPtr make_category(const std::vector<std::string>& objects,
                          const std::vector<FiniteCategory::Arrow>& arrows,
                          const std::vector<std::vector<std::string>>& composites) {
  std::vector<FiniteCategory::Arrow> morphisms;
  std::vector<Morphism> identities;
  std::map<std::string, Morphism> by_name;
  for (Object d = 0; d < static_cast<Object>(objects.size()); ++d) {
    identities.push_back(static_cast<Morphism>(morphisms.size()));
    by_name["id_" + objects[d]] = static_cast<Morphism>(morphisms.size());
    morphisms.push_back({"id_" + objects[d], d, d});
  }
  for (const auto& a : arrows) {
    if (by_name.count(a.name)) throw InvalidArgument("duplicate morphism name '" + a.name + "'");
    by_name[a.name] = static_cast<Morphism>(morphisms.size());
    morphisms.push_back(a);
  }
  const auto nm = morphisms.size();
  std::vector<std::vector<Morphism>> table(nm, std::vector<Morphism>(nm, -1));
  for (Morphism f = 0; f < static_cast<Morphism>(nm); ++f) {
    table[identities[morphisms[f].target]][f] = f;
    table[f][identities[morphisms[f].source]] = f;
  }
  auto lookup = [&](const std::string& name) {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw InvalidArgument("unknown morphism '" + name + "'");
    return it->second;
  };
  for (const auto& c : composites) {
    if (c.size() != 3) throw InvalidArgument("composite entries are [g, f, g o f]");
    auto g = lookup(c[0]);
    auto f = lookup(c[1]);
    table[g][f] = lookup(c[2]);
  }
  return std::make_shared<FiniteCategory>(objects, std::move(morphisms), std::move(identities),
                                          std::move(table));
}

namespace categories {

CategoryPtr terminal() { return make_category({"*"}, {}, {}); }

CategoryPtr poset(int n) {
  if (n < 0) throw InvalidArgument("poset size must be nonnegative");
  std::vector<std::string> objects;
  for (int i = 0; i <= n; ++i) objects.push_back(std::to_string(i));
  std::vector<FiniteCategory::Arrow> arrows;
  auto name = [](int i, int j) { return std::to_string(i) + "<" + std::to_string(j); };
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) arrows.push_back({name(i, j), i, j});
  std::vector<std::vector<std::string>> composites;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) composites.push_back({name(j, k), name(i, j), name(i, k)});
  return make_category(objects, arrows, composites);
}

CategoryPtr walking_iso() {
  return make_category({"0", "1"}, {{"f", 0, 1}, {"g", 1, 0}},
                       {{"g", "f", "id_0"}, {"f", "g", "id_1"}});
}

CategoryPtr discrete(int n) {
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  return make_category(objects, {}, {});
}

CategoryPtr z2() { return make_category({"*"}, {{"t", 0, 0}}, {{"t", "t", "id_*"}}); }

CategoryPtr span() { return make_category({"a", "b", "c"}, {{"l", 2, 0}, {"r", 2, 1}}, {}); }

CategoryPtr cospan() { return make_category({"a", "b", "c"}, {{"l", 0, 2}, {"r", 1, 2}}, {}); }

CategoryPtr parallel_pair() { return make_category({"a", "b"}, {{"u", 0, 1}, {"v", 0, 1}}, {}); }

CategoryPtr by_name(const std::string& name) {
  std::istringstream in(name);
  std::string head;
  in >> head;
  int n = -1;
  if (head == "terminal") return terminal();
  if (head == "arrow") return poset(1);
  if (head == "iso") return walking_iso();
  if (head == "z2") return z2();
  if (head == "span") return span();
  if (head == "cospan") return cospan();
  if (head == "parallel") return parallel_pair();
  if (head == "poset" && (in >> n) && n >= 0) return poset(n);
  if (head == "discrete" && (in >> n) && n >= 0) return discrete(n);
  throw InvalidArgument("unknown category generator '" + name + "'");
}

}  // namespace categories

}  // namespace hgc
