#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hgc/scat/monotone.hpp"

namespace hgc {

using Simplex = std::uint32_t;

/// A simplicial set truncated at `dim()`. Every simplex, degenerate or not, is
/// stored explicitly; simplices of degree n are the integers [0, size(n)).
///
/// faces[n][i][x] = d_i x for 1 <= n <= dim, 0 <= i <= n.
/// degeneracies[n][j][x] = s_j x for 0 <= n < dim, 0 <= j <= n.
///
/// The constructor checks table shapes and index ranges only. The simplicial
/// identities are checked by validate(), which reports violations as data.
class SimplicialSet {
 public:
  using Table = std::vector<std::vector<std::vector<Simplex>>>;

  SimplicialSet(int dim, std::vector<std::size_t> counts, Table faces, Table degeneracies,
                std::vector<std::vector<std::string>> labels = {});

  int dim() const { return dim_; }
  std::size_t size(int n) const { return counts_[static_cast<std::size_t>(n)]; }
  std::size_t total_size() const;
  std::vector<std::size_t> counts() const { return counts_; }

  Simplex face(int n, int i, Simplex x) const { return faces_[n][i][x]; }
  Simplex degeneracy(int n, int j, Simplex x) const { return degeneracies_[n][j][x]; }
  const Table& face_table() const { return faces_; }
  const Table& degeneracy_table() const { return degeneracies_; }

  /// x . op for x of degree op.target_dim(). Throws InsufficientTruncation when
  /// op.source_dim() exceeds dim().
  Simplex act(const MonotoneMap& op, Simplex x) const;
  /// The i-th vertex of an n-simplex.
  Simplex vertex(int n, Simplex x, int i) const;

  bool degenerate(int n, Simplex x) const { return degenerate_[n][x]; }
  std::vector<Simplex> nondegenerate(int n) const;
  /// Highest degree holding a nondegenerate simplex, -1 for the empty set.
  int top_nondegenerate_degree() const;

  /// Eilenberg-Zilber decomposition x = root . epi with root nondegenerate.
  struct Root {
    int degree;
    Simplex simplex;
    MonotoneMap epi;
  };
  const Root& root(int n, Simplex x) const { return roots_[n][x]; }

  /// The n-simplices x with d_i x = y (y of degree n-1).
  std::span<const Simplex> cofaces(int n, int i, Simplex y) const;

  bool has_labels() const { return !labels_.empty(); }
  /// User or construction label; falls back to "x<n>_<id>".
  std::string label(int n, Simplex x) const;
  std::optional<Simplex> find_label(int n, std::string_view label) const;

  /// Optional declared vertex sequences (checked by validate()).
  void declare_vertices(std::vector<std::vector<std::vector<Simplex>>> vertices);
  const std::vector<std::vector<std::vector<Simplex>>>& declared_vertices() const {
    return declared_vertices_;
  }

 private:
  void index();

  int dim_;
  std::vector<std::size_t> counts_;
  Table faces_;
  Table degeneracies_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::unordered_map<std::string, Simplex>> label_index_;
  std::vector<std::vector<std::vector<Simplex>>> declared_vertices_;

  std::vector<std::vector<bool>> degenerate_;
  std::vector<std::vector<Root>> roots_;
  // coface_offsets_[n][i] has size(n-1)+1 entries into coface_data_[n][i].
  std::vector<std::vector<std::vector<std::uint32_t>>> coface_offsets_;
  std::vector<std::vector<std::vector<Simplex>>> coface_data_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

/// Canonical content key used to build simplicial sets whose simplices are
/// tuples (chains, families of simplices, pairs, ...).
using Key = std::vector<std::int32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept;
};

/// A simplicial set together with the content keys of its simplices. Simplex
/// ids follow the lexicographic order of keys within each degree.
struct KeyedSet {
  SSetPtr set;
  std::vector<std::vector<Key>> keys;
  std::vector<std::unordered_map<Key, Simplex, KeyHash>> index;

  std::optional<Simplex> find(int n, const Key& key) const;
  /// Throws InvalidArgument when the key is absent.
  Simplex at(int n, const Key& key) const;
  const Key& key(int n, Simplex x) const { return keys[n][x]; }
};

/// Action of a simplicial operator on keys: maps a key of degree
/// op.target_dim() to the key of its image in degree op.source_dim().
using KeyAction = std::function<Key(const MonotoneMap& op, const Key& key)>;
using KeyLabel = std::function<std::string(int n, const Key& key)>;

/// Builds the simplicial set with simplices `keys[n]` (sorted and deduplicated
/// here); structure maps come from `act` applied to cofaces and codegeneracies.
/// Throws std::logic_error if the key family is not closed under them.
KeyedSet build_keyed(int dim, std::vector<std::vector<Key>> keys, const KeyAction& act,
                     const KeyLabel& label = {});

/// Changes the dimension bound. Lowering truncates; raising adds exactly the
/// degenerate simplices forced by the simplicial identities (skeletal extension).
SSetPtr retruncate(const SSetPtr& s, int dim);

}  // namespace hgc
