#include "pieri/multiplicity.hpp"

#include <functional>

#include "pieri/error.hpp"

namespace pieri {

std::uint64_t count_pair_arrays(const Composition& residual) {
  const int ell = static_cast<int>(residual.size());
  std::vector<int> left(residual.parts().begin(), residual.parts().end());
  std::function<std::uint64_t(int, int)> count = [&](int s, int t) -> std::uint64_t {
    if (t > ell) {
      if (left[s - 1] != 0) return 0;
      ++s;
      t = s + 1;
    }
    if (s >= ell) return (ell == 0 || left[ell - 1] == 0) ? 1 : 0;
    std::uint64_t total = 0;
    for (int v = 0; v <= std::min(left[s - 1], left[t - 1]); ++v) {
      left[s - 1] -= v;
      left[t - 1] -= v;
      total += count(s, t + 1);
      left[s - 1] += v;
      left[t - 1] += v;
    }
    return total;
  };
  if (ell == 0) return 1;
  return count(1, 2);
}

namespace {

void check_bounds(int k, int ell, const YoungDiagram& f, const YoungDiagram& d, const Composition& p) {
  if (k < 1 || ell < 1) throw Error("k and ell must be positive");
  if (d.num_rows() > k) throw Error("D has more than k rows");
  if (f.num_rows() > k + ell) throw Error("F has more than k + ell rows");
  if (p.size() != static_cast<std::size_t>(ell)) throw Error("P must have ell entries");
}

}  // namespace

std::uint64_t multiplicity(int k, int ell, const YoungDiagram& f, const YoungDiagram& d, const Composition& p) {
  check_bounds(k, ell, f, d, p);
  std::uint64_t total = 0;
  // Nonzero terms need E inside both D and F; E inside D already bounds its rows by k.
  for (int size = 0; size <= std::min(d.size(), f.size()); ++size)
    for (const auto& e : partitions(size, k)) {
      if (!d.contains(e) || !f.contains(e)) continue;
      const SkewShape top(f, e);
      const SkewShape bottom(d, e);
      for (const auto& a : bounded_compositions(top.size(), p.parts())) {
        const auto ka = kostka(top, a);
        if (ka == 0) continue;
        std::vector<int> room(p.size());
        for (std::size_t i = 0; i < room.size(); ++i) room[i] = p[i] - a[i];
        for (const auto& b : bounded_compositions(bottom.size(), room)) {
          const auto kb = kostka(bottom, b);
          if (kb == 0) continue;
          std::vector<int> residual(room.size());
          for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = room[i] - b[i];
          total += ka * kb * count_pair_arrays(Composition(std::move(residual)));
        }
      }
    }
  return total;
}

std::uint64_t multiplicity_via_cone(int k, int ell, const YoungDiagram& f, const YoungDiagram& d,
                                    const Composition& p) {
  check_bounds(k, ell, f, d, p);
  return enumerate_fiber(make_gamma_poset(k, ell), f, d, p).size();
}

DiagramTable decompose_o(int k, int ell, const YoungDiagram& d, const Composition& p, std::optional<int> n) {
  if (n && !(2 * (k + ell) < *n)) throw Error("outside stable range: 2(k+ell) < n is required for this multiplicity formula");
  if (k < 1 || ell < 1) throw Error("k and ell must be positive");
  if (d.num_rows() > k) throw Error("D has more than k rows");
  if (p.size() != static_cast<std::size_t>(ell)) throw Error("P must have ell entries");
  DiagramTable out;
  const int top = d.size() + p.total();
  for (int size = top % 2; size <= top; size += 2)
    for (auto& f : partitions(size, k + ell))
      if (auto m = multiplicity(k, ell, f, d, p); m > 0) out.emplace(std::move(f), m);
  return out;
}

DiagramTable decompose_sp(int k, int ell, const YoungDiagram& d, const Composition& p, int n) {
  if (k + ell > n) throw Error("k + ell <= n is required for the symplectic Pieri algebra");
  return decompose_o(k, ell, d, p);
}

}  // namespace pieri
