#include "pieri/poset.hpp"

#include <algorithm>

#include "pieri/error.hpp"

namespace pieri {

std::string GammaElement::to_string() const {
  return (is_eps() ? "e(" : "g(") + std::to_string(first) + "," + std::to_string(second) + ")";
}

GammaPoset::GammaPoset(int k, int ell) : k_(k), ell_(ell) {
  if (k < 1 || ell < 1) throw Error("poset parameters k and ell must be positive");

  for (int level = -ell; level <= ell; ++level) {
    row_offsets_.push_back(elements_.size());
    for (int j = 1; j <= row_length(level); ++j) elements_.push_back(GammaElement::gamma(level, j));
  }
  eps_offset_ = elements_.size();
  for (int s = 1; s <= ell; ++s)
    for (int t = s + 1; t <= ell; ++t) elements_.push_back(GammaElement::eps(s, t));

  const std::size_t n = elements_.size();
  order_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) order_[i * n + i] = true;
  auto relate = [&](const GammaElement& upper, const GammaElement& lower) {
    order_[index_of(lower) * n + index_of(upper)] = true;
  };
  for (int s = 0; s < ell; ++s) {
    for (int j = 1; j <= k + s; ++j) {
      relate(GammaElement::gamma(s + 1, j), GammaElement::gamma(s, j));
      relate(GammaElement::gamma(s, j), GammaElement::gamma(s + 1, j + 1));
    }
    for (int j = 1; j <= k; ++j) {
      relate(GammaElement::gamma(-s - 1, j), GammaElement::gamma(-s, j));
      if (j + 1 <= k) relate(GammaElement::gamma(-s, j), GammaElement::gamma(-s - 1, j + 1));
    }
  }
  // Transitive closure.
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      if (order_[a * n + m])
        for (std::size_t b = 0; b < n; ++b)
          if (order_[m * n + b]) order_[a * n + b] = true;
}

int GammaPoset::row_length(int level) const {
  if (level < -ell_ || level > ell_) throw Error("row level out of range");
  return k_ + std::max(0, level);
}

std::size_t GammaPoset::row_offset(int level) const {
  if (level < -ell_ || level > ell_) throw Error("row level out of range");
  return row_offsets_[static_cast<std::size_t>(level + ell_)];
}

std::size_t GammaPoset::eps_index(int s, int t) const {
  if (s < 1 || t <= s || t > ell_) throw Error("eps index out of range");
  // Pairs before (s, t) in lexicographic order.
  std::size_t before = 0;
  for (int a = 1; a < s; ++a) before += static_cast<std::size_t>(ell_ - a);
  return eps_offset_ + before + static_cast<std::size_t>(t - s - 1);
}

bool GammaPoset::contains(const GammaElement& e) const {
  if (e.is_eps()) return e.first >= 1 && e.second > e.first && e.second <= ell_;
  return e.first >= -ell_ && e.first <= ell_ && e.second >= 1 && e.second <= k_ + std::max(0, e.first);
}

std::size_t GammaPoset::index_of(const GammaElement& e) const {
  if (!contains(e)) throw Error("element " + e.to_string() + " is not in the poset");
  if (e.is_eps()) return eps_index(e.first, e.second);
  return row_offset(e.first) + static_cast<std::size_t>(e.second - 1);
}

std::vector<std::pair<GammaElement, GammaElement>> GammaPoset::hasse_edges() const {
  const std::size_t n = size();
  std::vector<std::pair<GammaElement, GammaElement>> edges;
  for (std::size_t upper = 0; upper < n; ++upper)
    for (std::size_t lower = 0; lower < n; ++lower) {
      if (upper == lower || !leq(lower, upper)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < n && covered; ++mid)
        if (mid != upper && mid != lower && leq(lower, mid) && leq(mid, upper)) covered = false;
      if (covered) edges.emplace_back(elements_[upper], elements_[lower]);
    }
  return edges;
}

namespace {

void search_upper_sets(const GammaPoset& poset, std::size_t i, std::vector<int>& state,
                       std::vector<std::vector<bool>>& out) {
  const std::size_t n = poset.size();
  if (i == n) {
    out.emplace_back(n);
    for (std::size_t j = 0; j < n; ++j) out.back()[j] = state[j] == 1;
    return;
  }
  for (int choice : {0, 1}) {
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      // Forbidden: a member below a non-member.
      if (choice == 1 && state[j] == 0 && poset.leq(i, j)) ok = false;
      if (choice == 0 && state[j] == 1 && poset.leq(j, i)) ok = false;
    }
    if (!ok) continue;
    state[i] = choice;
    search_upper_sets(poset, i + 1, state, out);
  }
  state[i] = -1;
}

}  // namespace

std::vector<std::vector<bool>> upper_sets_by_search(const GammaPoset& poset) {
  std::vector<std::vector<bool>> out;
  std::vector<int> state(poset.size(), -1);
  search_upper_sets(poset, 0, state, out);
  return out;
}

}  // namespace pieri
