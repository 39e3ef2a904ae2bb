#include "pieri/cone.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "pieri/error.hpp"

namespace pieri {

PairArray::PairArray(int ell, std::vector<int> values) : ell_(ell), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(ell * (ell - 1) / 2)) throw Error("pair array length mismatch");
}

std::size_t PairArray::slot(int s, int t) const {
  if (s < 1 || t <= s || t > ell_) throw Error("pair index out of range");
  std::size_t before = 0;
  for (int a = 1; a < s; ++a) before += static_cast<std::size_t>(ell_ - a);
  return before + static_cast<std::size_t>(t - s - 1);
}

std::string MultiDegree::to_string() const {
  return "F=" + f.to_string() + " D=" + d.to_string() + " P=" + p.to_string();
}

bool is_member(const GammaPoset& poset, std::span<const int> values) {
  const std::size_t n = poset.size();
  if (values.size() != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (values[a] < 0) return false;
    for (std::size_t b = 0; b < n; ++b)
      if (poset.leq(a, b) && values[a] > values[b]) return false;
  }
  return true;
}

bool is_member(const GammaPoset& poset, const std::map<GammaElement, int>& values) {
  std::vector<int> dense;
  dense.reserve(poset.size());
  for (const auto& e : poset.elements()) {
    auto it = values.find(e);
    if (it == values.end()) throw Error("missing value for element " + e.to_string());
    dense.push_back(it->second);
  }
  return is_member(poset, dense);
}

ConePoint::ConePoint(PosetPtr poset, std::vector<int> values) : poset_(std::move(poset)), values_(std::move(values)) {
  if (!is_member(*poset_, values_)) throw Error("function is not an order-preserving nonnegative member of the cone");
}

ConePoint ConePoint::zero(PosetPtr poset) {
  const std::size_t n = poset->size();
  return ConePoint(std::move(poset), std::vector<int>(n, 0));
}

ConePoint ConePoint::from_map(PosetPtr poset, const std::map<GammaElement, int>& values) {
  std::vector<int> dense;
  for (const auto& e : poset->elements()) {
    auto it = values.find(e);
    if (it == values.end()) throw Error("missing value for element " + e.to_string());
    dense.push_back(it->second);
  }
  return ConePoint(std::move(poset), std::move(dense));
}

int ConePoint::max_value() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

Composition row(const ConePoint& f, int level) {
  const auto& p = f.poset();
  const std::size_t off = p.row_offset(level);
  const auto len = static_cast<std::size_t>(p.row_length(level));
  const auto vals = f.values();
  return Composition(std::vector<int>(vals.begin() + off, vals.begin() + off + len));
}

Composition s_of_abc(const Composition& a, const Composition& b, const PairArray& c) {
  const int ell = static_cast<int>(a.size());
  if (b.size() != a.size() || c.ell() != ell) throw Error("S(A,B,C): length mismatch");
  std::vector<int> p(a.size());
  for (int i = 1; i <= ell; ++i) {
    int sum = a[i - 1] + b[i - 1];
    for (int s = 1; s < i; ++s) sum += c.at(s, i);
    for (int t = i + 1; t <= ell; ++t) sum += c.at(i, t);
    p[i - 1] = sum;
  }
  return Composition(std::move(p));
}

namespace {

int row_sum(std::span<const int> values, const GammaPoset& p, int level) {
  const auto off = p.row_offset(level);
  return std::accumulate(values.begin() + off, values.begin() + off + p.row_length(level), 0);
}

PairArray eps_values(const GammaPoset& p, std::span<const int> values) {
  return PairArray(p.ell(), std::vector<int>(values.begin() + p.eps_offset(), values.end()));
}

}  // namespace

Functionals functionals(const ConePoint& f) {
  const auto& p = f.poset();
  const auto vals = f.values();
  const int ell = p.ell();
  std::vector<int> a(ell), b(ell);
  for (int j = 1; j <= ell; ++j) {
    a[j - 1] = row_sum(vals, p, j) - row_sum(vals, p, j - 1);
    b[j - 1] = row_sum(vals, p, -j) - row_sum(vals, p, -j + 1);
  }
  Functionals out{Composition(std::move(a)), Composition(std::move(b)), eps_values(p, vals), {}};
  out.p = s_of_abc(out.a, out.b, out.c);
  return out;
}

namespace {

YoungDiagram as_diagram(const Composition& c) { return YoungDiagram(std::vector<int>(c.parts().begin(), c.parts().end())); }

}  // namespace

MultiDegree degree_of(const ConePoint& f) {
  const int ell = f.poset().ell();
  return {as_diagram(row(f, ell)), as_diagram(row(f, -ell)), functionals(f).p};
}

BlockKey block_of(const ConePoint& f) {
  auto fn = functionals(f);
  return {as_diagram(row(f, 0)), std::move(fn.a), std::move(fn.b), std::move(fn.c)};
}

namespace {

class FiberEnumerator {
 public:
  FiberEnumerator(const PosetPtr& poset, const Composition& p) : poset_(poset), p_(p) {}

  std::vector<ConePoint> run(const YoungDiagram& f, const YoungDiagram& d) {
    const auto& P = *poset_;
    const int ell = P.ell();
    const std::size_t n = P.size();
    values_.assign(n, 0);
    std::vector<bool> fixed(n, false);
    auto fix_row = [&](int level, const std::vector<int>& row) {
      const auto off = P.row_offset(level);
      for (std::size_t j = 0; j < row.size(); ++j) {
        values_[off + j] = row[j];
        fixed[off + j] = true;
      }
    };
    fix_row(-ell, d.padded(static_cast<std::size_t>(P.row_length(-ell))));
    fix_row(ell, f.padded(static_cast<std::size_t>(P.row_length(ell))));

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (fixed[a] && fixed[b] && P.leq(a, b) && values_[a] > values_[b]) return {};

    // Interior gamma elements in canonical order; each keeps the comparable
    // elements that are already assigned when it is visited.
    std::vector<bool> assigned = fixed;
    for (std::size_t i = P.row_offset(-ell + 1); i < P.row_offset(ell); ++i) {
      Slot slot{i, {}, {}};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !assigned[j]) continue;
        if (P.leq(j, i)) slot.lowers.push_back(j);
        if (P.leq(i, j)) slot.uppers.push_back(j);
      }
      slots_.push_back(std::move(slot));
      assigned[i] = true;
    }
    assign(0);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  struct Slot {
    std::size_t index;
    std::vector<std::size_t> lowers;
    std::vector<std::size_t> uppers;
  };

  void assign(std::size_t s) {
    if (s == slots_.size()) {
      finish_gamma();
      return;
    }
    const auto& slot = slots_[s];
    int lo = 0;
    int hi = std::numeric_limits<int>::max();
    for (auto j : slot.lowers) lo = std::max(lo, values_[j]);
    for (auto j : slot.uppers) hi = std::min(hi, values_[j]);
    for (int v = lo; v <= hi; ++v) {
      values_[slot.index] = v;
      assign(s + 1);
    }
  }

  void finish_gamma() {
    const auto& P = *poset_;
    const int ell = P.ell();
    residual_.assign(static_cast<std::size_t>(ell), 0);
    for (int j = 1; j <= ell; ++j) {
      const int a = row_sum(values_, P, j) - row_sum(values_, P, j - 1);
      const int b = row_sum(values_, P, -j) - row_sum(values_, P, -j + 1);
      residual_[j - 1] = p_[j - 1] - a - b;
      if (residual_[j - 1] < 0) return;
    }
    assign_pairs(1, 2);
  }

  // Distributes the residual degrees over c(s, t) in lexicographic order.
  void assign_pairs(int s, int t) {
    const auto& P = *poset_;
    const int ell = P.ell();
    if (t > ell) {
      if (residual_[s - 1] != 0) return;
      ++s;
      t = s + 1;
    }
    if (s >= ell) {
      if (ell >= 1 && residual_[ell - 1] != 0) return;
      out_.emplace_back(poset_, values_);
      return;
    }
    const auto slot = P.eps_index(s, t);
    const int hi = std::min(residual_[s - 1], residual_[t - 1]);
    for (int v = 0; v <= hi; ++v) {
      values_[slot] = v;
      residual_[s - 1] -= v;
      residual_[t - 1] -= v;
      assign_pairs(s, t + 1);
      residual_[s - 1] += v;
      residual_[t - 1] += v;
    }
    values_[slot] = 0;
  }

  PosetPtr poset_;
  const Composition& p_;
  std::vector<int> values_;
  std::vector<int> residual_;
  std::vector<Slot> slots_;
  std::vector<ConePoint> out_;
};

}  // namespace

std::vector<ConePoint> enumerate_fiber(const PosetPtr& poset, const YoungDiagram& f, const YoungDiagram& d,
                                       const Composition& p) {
  if (d.num_rows() > poset->k()) throw Error("D has more than k rows");
  if (f.num_rows() > poset->k() + poset->ell()) throw Error("F has more than k + ell rows");
  if (p.size() != static_cast<std::size_t>(poset->ell())) throw Error("P must have ell entries");
  return FiberEnumerator(poset, p).run(f, d);
}

ConePoint add(const ConePoint& f, const ConePoint& g) {
  if (!(f.poset() == g.poset())) throw Error("cone points live on different posets");
  std::vector<int> sum(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g.values()[i];
  return ConePoint(f.poset_ptr(), std::move(sum));
}

ConePoint random_member(const PosetPtr& poset, int max_value, std::mt19937_64& rng) {
  const auto& P = *poset;
  const std::size_t n = P.size();
  std::vector<std::size_t> above(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && P.leq(a, b)) ++above[a];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return above[x] < above[y]; });

  std::vector<int> values(n, 0);
  std::vector<bool> done(n, false);
  for (auto i : order) {
    int hi = max_value;
    for (std::size_t j = 0; j < n; ++j)
      if (done[j] && j != i && P.leq(i, j)) hi = std::min(hi, values[j]);
    values[i] = std::uniform_int_distribution<int>(0, hi)(rng);
    done[i] = true;
  }
  return ConePoint(poset, std::move(values));
}

}  // namespace pieri
