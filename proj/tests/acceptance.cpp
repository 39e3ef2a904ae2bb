// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "oracles.hpp"
#include "pieri/cone.hpp"
#include "pieri/diagrams.hpp"
#include "pieri/hibi.hpp"
#include "pieri/multiplicity.hpp"
#include "pieri/poset.hpp"
#include "pieri/standard_monomials.hpp"

using namespace pieri;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
};

oracle::Rows rows_of(const YoungDiagram& d) { return {d.rows().begin(), d.rows().end()}; }
std::vector<int> parts_of(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

std::string where(const YoungDiagram& f, const YoungDiagram& d, const Composition& p) {
  return "F=" + f.to_string() + " D=" + d.to_string() + " P=" + p.to_string();
}

const std::vector<std::pair<int, int>> kLmShapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};

/// Generators plus at least 200 random members (values <= 3) for one (k, ell).
std::vector<ConePoint> lm_sample(const PieriContext& ctx) {
  std::vector<ConePoint> out;
  for (const auto& [a, eta] : ctx.generators()) out.push_back(chi(a));
  std::mt19937_64 rng(static_cast<unsigned>(1000 * ctx.k() + ctx.ell()));
  for (int i = 0; i < 250; ++i) out.push_back(random_member(ctx.poset(), 3, rng));
  return out;
}

Monomial generator_formula(const PieriContext& ctx, const IncreasingSetKey& key) {
  const auto& ring = *ctx.ring();
  Monomial m(ring.num_vars());
  for (int a = 1; a <= key.c; ++a) m.set_exponent(ring.index(Variable::x(a, a)), 1);
  for (std::size_t a = 0; a < key.j_set.size(); ++a)
    m.set_exponent(ring.index(Variable::y(key.c + static_cast<int>(a) + 1, key.j_set[a])), 1);
  for (std::size_t a = 0; a < key.i_set.size(); ++a)
    m.set_exponent(ring.index(Variable::rxk(key.c + static_cast<int>(a) + 1, key.i_set[a])), 1);
  for (const auto& [s, t] : key.z_set) m.set_exponent(ring.index(Variable::rkk(s, t)), 1);
  return m;
}

Outcome criterion1() {
  Outcome o;
  for (int k = 1; k <= 6; ++k)
    for (int ell = 1; ell <= 6; ++ell) {
      const GammaPoset p(k, ell);
      const auto expected = static_cast<std::size_t>((2 * ell + 1) * k + ell * ell);
      o.expect(p.size() == expected, [&] { return "k=" + std::to_string(k) + " ell=" + std::to_string(ell); });
      o.expect(oracle::Poset(k, ell).elements.size() == expected, "oracle poset size");
    }
  return o;
}

/// Criteria 2 and 6 share one sweep over the grid.
std::pair<Outcome, Outcome> criteria2and6() {
  Outcome identity, witness;
  for (int k = 1; k <= 2; ++k)
    for (int ell = 1; ell <= 2; ++ell) {
      const auto ctx = PieriContext::create(2 * (k + ell) + 1, k, ell, false);
      const auto& poset = ctx->poset();
      const std::vector<int> bounds(static_cast<std::size_t>(ell), 3);
      for (int dsize = 0; dsize <= 3; ++dsize)
        for (const auto& d : partitions(dsize, k))
          for (int total = 0; total <= 3 * ell; ++total)
            for (const auto& p : bounded_compositions(total, bounds))
              for (int fsize = 0; fsize <= dsize + total; ++fsize)
                for (const auto& f : partitions(fsize, k + ell)) {
                  const auto fiber = enumerate_fiber(poset, f, d, p);
                  const auto m = multiplicity(k, ell, f, d, p);
                  const auto chains = oracle::multiplicity(k, rows_of(f), rows_of(d), parts_of(p));
                  identity.expect(fiber.size() == m && m == chains, [&] {
                    return where(f, d, p) + ": fiber " + std::to_string(fiber.size()) + ", Kostka sum " +
                           std::to_string(m) + ", chain oracle " + std::to_string(chains);
                  });

                  std::unordered_set<Monomial, MonomialHash> lms;
                  for (const auto& g : fiber) lms.insert(lm_predicted(*ctx, g));
                  witness.expect(lms.size() == fiber.size(), [&] { return "repeated LM in fiber " + where(f, d, p); });
                  // Additivity: the sum of two fiber points lies in the doubled fiber with the product LM.
                  if (!fiber.empty()) {
                    const auto& a = fiber.front();
                    const auto& b = fiber.back();
                    witness.expect(lm_predicted(*ctx, a + b) == lm_predicted(*ctx, a) * lm_predicted(*ctx, b),
                                   [&] { return "LM not additive in fiber " + where(f, d, p); });
                  }
                }
    }
  return {identity, witness};
}

Outcome criterion3() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (int ell = 1; ell <= 3; ++ell) {
      const auto p = make_gamma_poset(k, ell);
      std::set<std::vector<bool>> family;
      for (const auto& a : enumerate_generators(p)) family.insert(a.members());
      std::set<std::vector<bool>> brute;
      for (const auto& s : oracle::Poset(k, ell).upper_sets()) {
        std::vector<bool> mask(p->size(), false);
        for (const auto& [kind, x, y] : s)
          mask[p->index_of(kind == 0 ? GammaElement::gamma(x, y) : GammaElement::eps(x, y))] = true;
        brute.insert(mask);
      }
      o.expect(family == brute, [&] { return "family differs at k=" + std::to_string(k) + " ell=" + std::to_string(ell); });
    }
  for (int k = 1; k <= 4; ++k)
    o.expect(enumerate_generators(make_gamma_poset(k, 1)).size() == static_cast<std::size_t>(4 * k + 2),
             [&] { return "4k+2 fails at k=" + std::to_string(k); });
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto p = make_gamma_poset(2, 2);
  const auto gens = enumerate_generators(p);
  for (const auto& a : gens)
    for (const auto& b : gens)
      o.expect(chi(a) + chi(b) == chi(union_set(a, b)) + chi(intersect_set(a, b)),
               [&] { return a.key().to_string() + " / " + b.key().to_string(); });
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& [k, ell] : kLmShapes) {
    const auto ctx = PieriContext::create(2 * (k + ell) + 1, k, ell);
    for (const auto& [a, eta] : ctx->generators())
      o.expect(lm_predicted(*ctx, chi(a)) == generator_formula(*ctx, a.key()),
               [&] { return "generator formula at " + a.key().to_string(); });
    const auto& gens = ctx->generators();
    std::vector<ConePoint> points = lm_sample(*ctx);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) points.push_back(chi(gens[i].first) + chi(gens[j].first));
    for (const auto& g : points) {
      const auto eta = eta_of(*ctx, g);
      o.expect(!eta.is_zero() && eta.leading_monomial() == lm_predicted(*ctx, g), [&] {
        return "k=" + std::to_string(k) + " ell=" + std::to_string(ell) + ": LM differs from prediction";
      });
    }
  }
  return o;
}

Outcome criterion6_samples() {
  Outcome o;
  for (const auto& [k, ell] : kLmShapes) {
    const auto ctx = PieriContext::create(2 * (k + ell) + 1, k, ell);
    const auto sample = lm_sample(*ctx);
    std::set<std::vector<int>> distinct_points;
    std::unordered_set<Monomial, MonomialHash> distinct_lms;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      const auto& f = sample[i];
      const auto& g = sample[(i * 7 + 3) % sample.size()];
      o.expect(lm_predicted(*ctx, f + g) == lm_predicted(*ctx, f) * lm_predicted(*ctx, g), "additivity on sample");
      distinct_points.insert(std::vector<int>(f.values().begin(), f.values().end()));
      distinct_lms.insert(lm_predicted(*ctx, f));
    }
    o.expect(distinct_points.size() == distinct_lms.size(), "injectivity on sample");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& [k, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    const auto ctx = PieriContext::create(2 * (k + ell) + 1, k, ell);
    const auto& gens = ctx->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i; j < gens.size(); ++j) {
        const auto r = subduct(*ctx, gens[i].second * gens[j].second);
        bool decreasing = !r.trace.empty();
        for (std::size_t s = 1; s < r.trace.size(); ++s)
          decreasing = decreasing && compare_monomials(r.trace[s], r.trace[s - 1]) < 0;
        o.expect(r.remainder.is_zero() && decreasing, [&] {
          return gens[i].first.key().to_string() + " * " + gens[j].first.key().to_string();
        });
      }
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto ctx = PieriContext::create(7, 2, 1);
  for (const auto& [a, eta] : ctx->generators())
    o.expect(highest_weight_check(*ctx, eta), [&] { return "highest weight fails at " + a.key().to_string(); });
  for (const auto& [k, ell] : kLmShapes) {
    const auto c = PieriContext::create(2 * (k + ell) + 1, k, ell);
    for (const auto& g : lm_sample(*c))
      o.expect(multidegree_of_polynomial(*c, eta_of(*c, g)) == degree_of(g), "grading mismatch");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const DiagramTable expected{{YoungDiagram{2}, 1}, {YoungDiagram{1, 1}, 1}, {YoungDiagram{}, 1}};
  o.expect(decompose_o(1, 1, YoungDiagram{1}, Composition{1}, 5) == expected, "decompose O");
  o.expect(decompose_sp(1, 1, YoungDiagram{1}, Composition{1}, 2) == expected, "decompose Sp");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const int n = 3;
  for (int dsize = 0; dsize <= 2; ++dsize)
    for (const auto& d : partitions(dsize, n))
      for (int total = 0; total <= 3; ++total)
        for (std::size_t len = 1; len <= 3; ++len)
          for (const auto& p : bounded_compositions(total, std::vector<int>(len, total))) {
            std::uint64_t lhs = 0;
            for (const auto& [f, m] : gl_iterated_pieri(d, p, n)) {
              o.expect(gl_dim(f, n) == oracle::gl_dim(rows_of(f), n), "gl_dim disagrees with tableau count");
              lhs += m * gl_dim(f, n);
            }
            std::uint64_t rhs = gl_dim(d, n);
            for (std::size_t i = 0; i < p.size(); ++i) rhs *= gl_dim(YoungDiagram{p[i]}, n);
            o.expect(lhs == rhs, [&] { return "D=" + d.to_string() + " P=" + p.to_string(); });
          }
  return o;
}

bool report(int number, const char* title, const Outcome& o, double seconds) {
  std::printf("criterion %2d %s  %-58s %8zu checks  %7.2f s\n", number, o.failed == 0 ? "PASS" : "FAIL", title,
              o.checked, seconds);
  if (o.failed) std::printf("             %zu failed; first: %s\n", o.failed, o.first_failure.c_str());
  std::fflush(stdout);
  return o.failed == 0;
}

template <typename F>
std::pair<decltype(std::declval<F>()()), double> timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  return {std::move(result), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

}  // namespace

int main() {
  bool ok = true;
  {
    auto [o, t] = timed(criterion1);
    ok &= report(1, "poset cardinality (2l+1)k + l^2, k,l <= 6", o, t);
  }
  auto [grid, grid_time] = timed(criteria2and6);
  ok &= report(2, "fiber count = Kostka sum = multiplicity on the grid", grid.first, grid_time);
  {
    auto [o, t] = timed(criterion3);
    ok &= report(3, "increasing sets are the (c,I,J,Z) family; 4k+2 at l=1", o, t);
  }
  {
    auto [o, t] = timed(criterion4);
    ok &= report(4, "Hibi relations on all pairs at (2,2)", o, t);
  }
  {
    auto [o, t] = timed(criterion5);
    ok &= report(5, "leading monomial theorem on generators and samples", o, t);
  }
  {
    auto [o, t] = timed(criterion6_samples);
    Outcome merged = grid.second;
    merged.checked += o.checked;
    if (o.failed && merged.failed == 0) merged.first_failure = o.first_failure;
    merged.failed += o.failed;
    ok &= report(6, "predicted LMs additive, injective, distinct per fiber", merged, t);
  }
  {
    auto [o, t] = timed(criterion7);
    ok &= report(7, "subduction of generator products, remainder 0", o, t);
  }
  {
    auto [o, t] = timed(criterion8);
    ok &= report(8, "highest weight generators and grading consistency", o, t);
  }
  {
    auto [o, t] = timed(criterion9);
    ok &= report(9, "O_5 and Sp_4 decompositions of (1) x (1)", o, t);
  }
  {
    auto [o, t] = timed(criterion10);
    ok &= report(10, "GL_3 dimension bookkeeping", o, t);
  }
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria FAILED");
  return ok ? 0 : 1;
}
