#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pieri/cone.hpp"
#include "pieri/poset.hpp"

namespace pieri {

/// Parameters of an increasing set: the gamma part is determined by c (the
/// number of members on level 0) and the index sets I, J recording where
/// the per-level counts step up going down (I) and up (J); Z lists the eps
/// members as (s, t) pairs.
struct IncreasingSetKey {
  int c = 0;
  std::vector<int> i_set;
  std::vector<int> j_set;
  std::vector<std::pair<int, int>> z_set;

  std::string to_string() const;
  friend bool operator==(const IncreasingSetKey&, const IncreasingSetKey&) = default;
  friend auto operator<=>(const IncreasingSetKey&, const IncreasingSetKey&) = default;
};

class IncreasingSet {
 public:
  /// Throws pieri::Error unless the mask is upward closed.
  IncreasingSet(PosetPtr poset, std::vector<bool> members);

  const GammaPoset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const std::vector<bool>& members() const { return members_; }
  bool contains(std::size_t index) const { return members_[index]; }
  bool contains(const GammaElement& e) const { return members_[poset_->index_of(e)]; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool subset_of(const IncreasingSet& other) const;

  const IncreasingSetKey& key() const { return key_; }
  /// Member counts a_{-ell}, ..., a_{ell} per gamma level.
  std::vector<int> level_counts() const;

  friend bool operator==(const IncreasingSet& a, const IncreasingSet& b) {
    return *a.poset_ == *b.poset_ && a.members_ == b.members_;
  }
  friend bool operator<(const IncreasingSet& a, const IncreasingSet& b) { return a.members_ < b.members_; }

 private:
  PosetPtr poset_;
  std::vector<bool> members_;
  IncreasingSetKey key_;
};

/// Builds the increasing set with parameters (c, I, J, Z). Throws
/// "row capacity exceeded" when |I| > k - c.
IncreasingSet from_cijz(const PosetPtr& poset, int c, std::vector<int> i_set, std::vector<int> j_set,
                        std::vector<std::pair<int, int>> z_set = {});
IncreasingSet from_key(const PosetPtr& poset, const IncreasingSetKey& key);

/// Every increasing subset, ordered by (c, I, J, Z) with the index sets in
/// subset-bitmask order.
std::vector<IncreasingSet> enumerate_generators(const PosetPtr& poset);

ConePoint chi(const IncreasingSet& a);

IncreasingSet union_set(const IncreasingSet& a, const IncreasingSet& b);
IncreasingSet intersect_set(const IncreasingSet& a, const IncreasingSet& b);

/// Sum of coefficient * chi(set) with strictly nested sets, smallest first.
struct StandardExpression {
  std::vector<std::pair<int, IncreasingSet>> terms;

  ConePoint reconstruct(const PosetPtr& poset) const;
};

/// Level-set decomposition of a cone point.
StandardExpression standard_decomposition(const ConePoint& g);

/// Covering pairs (lower, upper) of the lattice of increasing sets.
std::vector<std::pair<IncreasingSet, IncreasingSet>> lattice_hasse(const PosetPtr& poset);

}  // namespace pieri
