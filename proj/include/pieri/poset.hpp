#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pieri {

/// Element of the poset: either gamma(level, index) with -ell <= level <= ell
/// and 1 <= index <= k + max(0, level), or eps(s, t) with 1 <= s < t <= ell.
struct GammaElement {
  enum class Kind { gamma, eps };

  Kind kind = Kind::gamma;
  int first = 0;   // level, or s
  int second = 0;  // index, or t

  static GammaElement gamma(int level, int index) { return {Kind::gamma, level, index}; }
  static GammaElement eps(int s, int t) { return {Kind::eps, s, t}; }

  bool is_eps() const { return kind == Kind::eps; }
  std::string to_string() const;

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;
};

/// The finite poset whose order-preserving Z>=0 functions form the cone.
///
/// Elements are indexed canonically: gamma rows from level -ell up to +ell,
/// each row left to right, followed by the eps(s, t) in lexicographic order.
/// Within gamma the order is generated by, for 0 <= s < ell,
///   gamma(s+1, j) >= gamma(s, j) >= gamma(s+1, j+1)       (1 <= j <= k+s)
///   gamma(-s-1, j) >= gamma(-s, j) >= gamma(-s-1, j+1)    (j <= k, j+1 <= k)
/// so adjacent rows of an order-preserving function interlace. The eps
/// elements form an antichain incomparable to everything else.
class GammaPoset {
 public:
  GammaPoset(int k, int ell);

  int k() const { return k_; }
  int ell() const { return ell_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GammaElement>& elements() const { return elements_; }
  const GammaElement& element(std::size_t index) const { return elements_.at(index); }

  bool contains(const GammaElement& e) const;
  /// Throws pieri::Error for elements outside the poset.
  std::size_t index_of(const GammaElement& e) const;

  /// Number of gamma elements on a level: k + max(0, level).
  int row_length(int level) const;
  /// Canonical index of gamma(level, 1).
  std::size_t row_offset(int level) const;
  std::size_t eps_offset() const { return eps_offset_; }
  std::size_t eps_index(int s, int t) const;

  bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b]; }
  bool leq(const GammaElement& a, const GammaElement& b) const { return leq(index_of(a), index_of(b)); }

  /// Covering pairs (upper, lower), sorted by (upper index, lower index).
  std::vector<std::pair<GammaElement, GammaElement>> hasse_edges() const;

  friend bool operator==(const GammaPoset& a, const GammaPoset& b) { return a.k_ == b.k_ && a.ell_ == b.ell_; }

 private:
  int k_;
  int ell_;
  std::vector<GammaElement> elements_;
  std::vector<std::size_t> row_offsets_;
  std::size_t eps_offset_ = 0;
  std::vector<bool> order_;  // order_[a * N + b] <=> a <= b
};

using PosetPtr = std::shared_ptr<const GammaPoset>;

inline PosetPtr make_gamma_poset(int k, int ell) { return std::make_shared<const GammaPoset>(k, ell); }

/// Expected element count (2 ell + 1) k + ell^2.
inline std::size_t gamma_cardinality(int k, int ell) {
  return static_cast<std::size_t>((2 * ell + 1) * k + ell * ell);
}

/// All upward-closed subsets, found by include/exclude search over the order
/// relation alone. Sets are returned as membership masks in canonical order.
std::vector<std::vector<bool>> upper_sets_by_search(const GammaPoset& poset);

}  // namespace pieri
