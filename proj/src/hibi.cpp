#include "pieri/hibi.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "pieri/error.hpp"

namespace pieri {

namespace {

bool upward_closed(const GammaPoset& p, const std::vector<bool>& members) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    if (members[a])
      for (std::size_t b = 0; b < n; ++b)
        if (!members[b] && p.leq(a, b)) return false;
  return true;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> mask_to_set(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1u) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string IncreasingSetKey::to_string() const {
  std::ostringstream os;
  os << "c=" << c << " I={" << join(i_set) << "} J={" << join(j_set) << "} Z={";
  for (std::size_t i = 0; i < z_set.size(); ++i)
    os << (i ? "," : "") << '(' << z_set[i].first << ',' << z_set[i].second << ')';
  os << '}';
  return os.str();
}

IncreasingSet::IncreasingSet(PosetPtr poset, std::vector<bool> members)
    : poset_(std::move(poset)), members_(std::move(members)) {
  const auto& p = *poset_;
  if (members_.size() != p.size()) throw Error("membership mask has wrong length");
  if (!upward_closed(p, members_)) throw Error("subset is not increasing");

  const auto counts = level_counts();
  const int ell = p.ell();
  key_.c = counts[static_cast<std::size_t>(ell)];
  for (int s = 0; s < ell; ++s) {
    if (counts[static_cast<std::size_t>(ell - s - 1)] == counts[static_cast<std::size_t>(ell - s)] + 1)
      key_.i_set.push_back(s + 1);
    if (counts[static_cast<std::size_t>(ell + s + 1)] == counts[static_cast<std::size_t>(ell + s)] + 1)
      key_.j_set.push_back(s + 1);
  }
  for (std::size_t i = p.eps_offset(); i < p.size(); ++i)
    if (members_[i]) key_.z_set.emplace_back(p.element(i).first, p.element(i).second);
}

std::size_t IncreasingSet::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

bool IncreasingSet::subset_of(const IncreasingSet& other) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] && !other.members_[i]) return false;
  return true;
}

std::vector<int> IncreasingSet::level_counts() const {
  const auto& p = *poset_;
  std::vector<int> counts;
  for (int level = -p.ell(); level <= p.ell(); ++level) {
    const auto off = p.row_offset(level);
    int count = 0;
    for (int j = 0; j < p.row_length(level); ++j) count += members_[off + static_cast<std::size_t>(j)] ? 1 : 0;
    counts.push_back(count);
  }
  return counts;
}

IncreasingSet from_cijz(const PosetPtr& poset, int c, std::vector<int> i_set, std::vector<int> j_set,
                        std::vector<std::pair<int, int>> z_set) {
  const auto& p = *poset;
  const int k = p.k();
  const int ell = p.ell();
  if (c < 0 || c > k) throw Error("c must satisfy 0 <= c <= k");
  auto normalize = [ell](std::vector<int>& s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("index sets must not repeat entries");
    for (int v : s)
      if (v < 1 || v > ell) throw Error("index sets must lie in {1..ell}");
  };
  normalize(i_set);
  normalize(j_set);
  if (static_cast<int>(i_set.size()) > k - c) throw Error("row capacity exceeded");

  std::vector<int> counts(static_cast<std::size_t>(2 * ell + 1), 0);
  auto at = [&](int level) -> int& { return counts[static_cast<std::size_t>(level + ell)]; };
  at(0) = c;
  for (int s = 0; s < ell; ++s) {
    const bool in_i = std::binary_search(i_set.begin(), i_set.end(), s + 1);
    const bool in_j = std::binary_search(j_set.begin(), j_set.end(), s + 1);
    at(-s - 1) = at(-s) + (in_i ? 1 : 0);
    at(s + 1) = at(s) + (in_j ? 1 : 0);
  }

  std::vector<bool> members(p.size(), false);
  for (int level = -ell; level <= ell; ++level)
    for (int j = 0; j < at(level); ++j) members[p.row_offset(level) + static_cast<std::size_t>(j)] = true;
  for (const auto& [s, t] : z_set) members[p.eps_index(s, t)] = true;
  return IncreasingSet(poset, std::move(members));
}

IncreasingSet from_key(const PosetPtr& poset, const IncreasingSetKey& key) {
  return from_cijz(poset, key.c, key.i_set, key.j_set, key.z_set);
}

std::vector<IncreasingSet> enumerate_generators(const PosetPtr& poset) {
  const auto& p = *poset;
  const int k = p.k();
  const int ell = p.ell();
  std::vector<std::pair<int, int>> eps;
  for (std::size_t i = p.eps_offset(); i < p.size(); ++i) eps.emplace_back(p.element(i).first, p.element(i).second);

  std::vector<IncreasingSet> out;
  const unsigned subsets = 1u << ell;
  for (int c = 0; c <= k; ++c)
    for (unsigned im = 0; im < subsets; ++im) {
      if (std::popcount(im) > k - c) continue;
      for (unsigned jm = 0; jm < subsets; ++jm)
        for (std::size_t zm = 0; zm < (std::size_t{1} << eps.size()); ++zm) {
          std::vector<std::pair<int, int>> z;
          for (std::size_t e = 0; e < eps.size(); ++e)
            if ((zm >> e) & 1u) z.push_back(eps[e]);
          out.push_back(from_cijz(poset, c, mask_to_set(im), mask_to_set(jm), std::move(z)));
        }
    }
  return out;
}

ConePoint chi(const IncreasingSet& a) {
  std::vector<int> values(a.members().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.contains(i) ? 1 : 0;
  return ConePoint(a.poset_ptr(), std::move(values));
}

namespace {

template <typename Op>
IncreasingSet combine(const IncreasingSet& a, const IncreasingSet& b, Op op) {
  if (!(a.poset() == b.poset())) throw Error("increasing sets live on different posets");
  std::vector<bool> members(a.members().size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = op(a.contains(i), b.contains(i));
  return IncreasingSet(a.poset_ptr(), std::move(members));
}

}  // namespace

IncreasingSet union_set(const IncreasingSet& a, const IncreasingSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

IncreasingSet intersect_set(const IncreasingSet& a, const IncreasingSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

ConePoint StandardExpression::reconstruct(const PosetPtr& poset) const {
  std::vector<int> values(poset->size(), 0);
  for (const auto& [coef, set] : terms)
    for (std::size_t i = 0; i < values.size(); ++i)
      if (set.contains(i)) values[i] += coef;
  return ConePoint(poset, std::move(values));
}

StandardExpression standard_decomposition(const ConePoint& g) {
  const auto vals = g.values();
  std::set<int> levels;
  for (int v : vals)
    if (v > 0) levels.insert(v);

  StandardExpression out;
  int previous = 0;
  for (int level : levels) {
    std::vector<bool> members(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) members[i] = vals[i] >= level;
    out.terms.emplace_back(level - previous, IncreasingSet(g.poset_ptr(), std::move(members)));
    previous = level;
  }
  // Level sets shrink as the threshold grows; store the smallest first.
  std::reverse(out.terms.begin(), out.terms.end());
  return out;
}

std::vector<std::pair<IncreasingSet, IncreasingSet>> lattice_hasse(const PosetPtr& poset) {
  const auto& p = *poset;
  std::vector<std::pair<IncreasingSet, IncreasingSet>> edges;
  // Covers in a lattice of increasing sets add exactly one element.
  for (const auto& lower : enumerate_generators(poset))
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (lower.contains(x)) continue;
      auto members = lower.members();
      members[x] = true;
      if (upward_closed(p, members)) edges.emplace_back(lower, IncreasingSet(poset, std::move(members)));
    }
  return edges;
}

}  // namespace pieri
