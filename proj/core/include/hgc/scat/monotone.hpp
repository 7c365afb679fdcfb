#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hgc {

/// A weakly increasing map [m] -> [n]. Doubles as a simplex of Delta[n] and as
/// a simplicial operator acting contravariantly on simplicial sets.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  /// Throws InvalidArgument unless `values` is weakly increasing with entries in [0, target].
  MonotoneMap(std::vector<int> values, int target);

  static MonotoneMap identity(int n);
  /// delta^i : [n-1] -> [n], the injection skipping i.
  static MonotoneMap coface(int n, int i);
  /// sigma^j : [n+1] -> [n], the surjection hitting j twice.
  static MonotoneMap codegeneracy(int n, int j);
  static MonotoneMap constant(int m, int target, int value);
  /// Inclusion of a nonempty subset of [n], listed in increasing order.
  static MonotoneMap inclusion(const std::vector<int>& subset, int n);

  /// All monotone maps [m] -> [n] in lexicographic order.
  static std::vector<MonotoneMap> all(int m, int n);

  int source_dim() const { return static_cast<int>(values_.size()) - 1; }
  int target_dim() const { return target_; }
  int operator()(int k) const { return values_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& values() const { return values_; }

  bool injective() const;
  bool surjective() const;

  /// Factor as mono o epi; returns {epi, mono}.
  std::pair<MonotoneMap, MonotoneMap> epi_mono() const;

  /// Restriction to the initial segment [0..k], viewed as a map [k] -> [this(k)].
  MonotoneMap prefix(int k) const;

  std::string str() const;

  friend auto operator<=>(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  std::vector<int> values_;
  int target_ = 0;
};

/// g o f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

}  // namespace hgc
