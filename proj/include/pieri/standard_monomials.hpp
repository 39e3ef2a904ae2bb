#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pieri/cone.hpp"
#include "pieri/hibi.hpp"
#include "pieri/poset.hpp"
#include "pieri/polyring.hpp"

namespace pieri {

/// Immutable bundle of (n, k, ell), the poset, the ring and the generator
/// polynomials eta_A for every increasing set A.
class PieriContext {
 public:
  /// Requires the stable range 2 (k + ell) < n. Without `precompute` the
  /// generator list stays empty and generator() expands determinants on demand.
  static std::shared_ptr<const PieriContext> create(int n, int k, int ell, bool precompute = true);

  int n() const { return ring_->n(); }
  int k() const { return poset_->k(); }
  int ell() const { return poset_->ell(); }
  const PosetPtr& poset() const { return poset_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::pair<IncreasingSet, Polynomial>>& generators() const { return generators_; }
  Polynomial generator(const IncreasingSet& a) const;

  PieriContext(PosetPtr poset, RingPtr ring);

 private:
  PosetPtr poset_;
  RingPtr ring_;
  std::vector<std::pair<IncreasingSet, Polynomial>> generators_;
  std::map<std::vector<bool>, std::size_t> lookup_;
};

using ContextPtr = std::shared_ptr<const PieriContext>;

/// Determinant of the (c+u+v)-square matrix whose first c+v rows are
/// [x(a, 1..c+u) | y(a, j_1..j_v)] and whose last u rows are
/// [r(1..c+u, k+i_b) | 0].
Polynomial eta_cij(const PieriContext& ctx, int c, std::vector<int> i_set, std::vector<int> j_set);

/// eta_(c,I,J) times the r(k+s, k+t) for (s, t) in Z.
Polynomial eta_generator(const PieriContext& ctx, const IncreasingSet& a);

/// Product of generators along the standard decomposition of g.
Polynomial eta_of(const PieriContext& ctx, const ConePoint& g);

Monomial lm_predicted(const PieriContext& ctx, const ConePoint& g);

/// The unique g with lm_predicted(g) == m, if any.
std::optional<ConePoint> match_leading_monomial(const PieriContext& ctx, const Monomial& m);

struct StandardCombination {
  std::vector<std::pair<Integer, ConePoint>> terms;
};

struct SubductionResult {
  StandardCombination combination;
  Polynomial remainder;
  /// Leading monomial of the running polynomial before each step.
  std::vector<Monomial> trace;
};

SubductionResult subduct(const PieriContext& ctx, const Polynomial& p);

/// True iff every raising derivation d_i (rows) and e_i (columns of x and
/// r(., k+j)) kills p.
bool highest_weight_check(const PieriContext& ctx, const Polynomial& p);

/// (F, D, P) read off the exponents; throws "not multihomogeneous" when the
/// terms disagree.
MultiDegree multidegree_of_polynomial(const PieriContext& ctx, const Polynomial& p);

}  // namespace pieri
