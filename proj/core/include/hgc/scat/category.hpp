#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hgc {

using Object = int;
using Morphism = int;

/// A finite category given by its composition table. Morphisms and objects are
/// dense integer ids; names are for I/O only.
class FiniteCategory {
 public:
  struct Arrow {
    std::string name;
    Object source;
    Object target;
  };

  /// `compose[g][f]` is g o f when target(f) == source(g), and -1 otherwise.
  /// `identities[d]` names the identity of object d.
  FiniteCategory(std::vector<std::string> objects, std::vector<Arrow> morphisms,
                 std::vector<Morphism> identities, std::vector<std::vector<Morphism>> compose);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(Object d) const { return objects_[d]; }
  const std::string& morphism_name(Morphism f) const { return morphisms_[f].name; }
  Object source(Morphism f) const { return morphisms_[f].source; }
  Object target(Morphism f) const { return morphisms_[f].target; }
  Morphism identity(Object d) const { return identities_[d]; }
  bool is_identity(Morphism f) const { return identities_[source(f)] == f; }
  /// g o f, or -1 when not composable or when the table has no entry.
  Morphism compose(Morphism g, Morphism f) const { return compose_[g][f]; }
  const std::vector<std::vector<Morphism>>& compose_table() const { return compose_; }
  const std::vector<Arrow>& morphisms() const { return morphisms_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& identities() const { return identities_; }

  std::optional<Object> find_object(const std::string& name) const;
  std::optional<Morphism> find_morphism(const std::string& name) const;
  /// Morphisms d -> e in id order.
  std::vector<Morphism> hom(Object d, Object e) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> morphisms_;
  std::vector<Morphism> identities_;
  std::vector<std::vector<Morphism>> compose_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Builds a category from generating objects/arrows and a partial table of
/// composites of non-identity arrows; identities and unit laws are filled in.
/// `composites` entries are {g, f, g o f} by name.
CategoryPtr make_category(const std::vector<std::string>& objects,
                          const std::vector<FiniteCategory::Arrow>& arrows,
                          const std::vector<std::vector<std::string>>& composites);

namespace categories {

CategoryPtr terminal();
/// The poset [n] = {0 < 1 < ... < n}.
CategoryPtr poset(int n);
/// Two objects and an inverse pair f, g.
CategoryPtr walking_iso();
CategoryPtr discrete(int n);
/// One object with an involution t (t o t = id).
CategoryPtr z2();
/// a <- c -> b.
CategoryPtr span();
/// a -> c <- b.
CategoryPtr cospan();
/// Two parallel arrows a => b.
CategoryPtr parallel_pair();

/// Looks up a catalog shape by name ("terminal", "arrow", "poset n", "iso",
/// "discrete n", "z2", "span", "cospan", "parallel"). Throws InvalidArgument.
CategoryPtr by_name(const std::string& name);

}  // namespace categories

/// A functor between finite categories.
struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<Object> on_objects;
  std::vector<Morphism> on_morphisms;
};

}  // namespace hgc
