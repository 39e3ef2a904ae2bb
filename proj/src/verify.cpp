#include "pieri/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "pieri/error.hpp"
#include "pieri/multiplicity.hpp"

namespace pieri {

namespace {

std::string point_string(const ConePoint& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.values().size(); ++i) out += (i ? "," : "") + std::to_string(g.values()[i]);
  return out + "]";
}

/// Product formula for the leading monomial of a generator, read from its key.
Monomial generator_lm_formula(const PieriContext& ctx, const IncreasingSetKey& key) {
  const auto& ring = *ctx.ring();
  Monomial m(ring.num_vars());
  auto bump = [&](const Variable& v) { m.set_exponent(ring.index(v), m.exponent(ring.index(v)) + 1); };
  for (int a = 1; a <= key.c; ++a) bump(Variable::x(a, a));
  for (std::size_t a = 0; a < key.j_set.size(); ++a) bump(Variable::y(key.c + static_cast<int>(a) + 1, key.j_set[a]));
  for (std::size_t a = 0; a < key.i_set.size(); ++a)
    bump(Variable::rxk(key.c + static_cast<int>(a) + 1, key.i_set[a]));
  for (const auto& [s, t] : key.z_set) bump(Variable::rkk(s, t));
  return m;
}

std::vector<ConePoint> random_sample(const PieriContext& ctx, unsigned seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<ConePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_member(ctx.poset(), 3, rng));
  return out;
}

void check_lm(const PieriContext& ctx, const ConePoint& g, SuiteReport& r) {
  ++r.checked;
  const auto eta = eta_of(ctx, g);
  if (eta.is_zero()) {
    r.failures.push_back("eta vanished at " + point_string(g));
    return;
  }
  if (!(eta.leading_monomial() == lm_predicted(ctx, g)))
    r.failures.push_back("leading monomial mismatch at " + point_string(g) + ": got " +
                         monomial_to_string(*ctx.ring(), eta.leading_monomial()) + ", predicted " +
                         monomial_to_string(*ctx.ring(), lm_predicted(ctx, g)));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lm", "hibi", "oracle", "subduction", "hw"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const PieriContext& ctx, unsigned seed) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, ctx, seed).front());
    return out;
  }
  if (name == "lm") return {verify_lm(ctx, seed)};
  if (name == "hibi") return {verify_hibi(ctx)};
  if (name == "oracle") return {verify_oracle(ctx)};
  if (name == "subduction") return {verify_subduction(ctx)};
  if (name == "hw") return {verify_hw(ctx, seed)};
  throw Error("unknown suite: " + name);
}

SuiteReport verify_lm(const PieriContext& ctx, unsigned seed, std::size_t samples) {
  SuiteReport r{"lm", 0, {}};
  const auto& gens = ctx.generators();
  for (const auto& [a, eta] : gens) {
    const auto g = chi(a);
    ++r.checked;
    if (!(lm_predicted(ctx, g) == generator_lm_formula(ctx, a.key())))
      r.failures.push_back("predicted monomial disagrees with the generator formula at " + a.key().to_string());
    check_lm(ctx, g, r);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) check_lm(ctx, chi(gens[i].first) + chi(gens[j].first), r);

  const auto sample = random_sample(ctx, seed, samples);
  std::unordered_map<Monomial, ConePoint, MonomialHash> seen;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto& g = sample[i];
    check_lm(ctx, g, r);
    const auto m = lm_predicted(ctx, g);
    if (auto [it, fresh] = seen.emplace(m, g); !fresh && !(it->second == g))
      r.failures.push_back("predicted monomial not injective: " + point_string(g) + " and " + point_string(it->second));
    const auto& h = sample[(i + 1) % sample.size()];
    ++r.checked;
    if (!(lm_predicted(ctx, g + h) == m * lm_predicted(ctx, h)))
      r.failures.push_back("predicted monomial not additive at " + point_string(g) + " + " + point_string(h));
  }
  return r;
}

SuiteReport verify_hibi(const PieriContext& ctx) {
  SuiteReport r{"hibi", 0, {}};
  const auto& poset = ctx.poset();
  std::set<std::vector<bool>> by_search;
  for (auto& s : upper_sets_by_search(*poset)) by_search.insert(std::move(s));
  std::set<std::vector<bool>> by_key;
  for (const auto& [a, eta] : ctx.generators()) by_key.insert(a.members());
  ++r.checked;
  if (by_search != by_key)
    r.failures.push_back("increasing sets by search (" + std::to_string(by_search.size()) +
                         ") differ from the parameterized family (" + std::to_string(by_key.size()) + ")");
  if (poset->ell() == 1 && by_key.size() != static_cast<std::size_t>(4 * poset->k() + 2))
    r.failures.push_back("expected 4k+2 increasing sets for ell = 1");

  const auto& gens = ctx.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const auto& a = gens[i].first;
      const auto& b = gens[j].first;
      ++r.checked;
      if (!(chi(a) + chi(b) == chi(union_set(a, b)) + chi(intersect_set(a, b))))
        r.failures.push_back("Hibi relation fails for " + a.key().to_string() + " and " + b.key().to_string());
    }
  return r;
}

SuiteReport verify_oracle(const PieriContext& ctx, int max_d, int max_p) {
  SuiteReport r{"oracle", 0, {}};
  const int k = ctx.k();
  const int ell = ctx.ell();
  std::vector<int> bounds(static_cast<std::size_t>(ell), max_p);
  for (int dsize = 0; dsize <= max_d; ++dsize)
    for (const auto& d : partitions(dsize, k))
      for (int ptotal = 0; ptotal <= max_p * ell; ++ptotal)
        for (const auto& p : bounded_compositions(ptotal, bounds))
          for (int fsize = 0; fsize <= dsize + ptotal; ++fsize)
            for (const auto& f : partitions(fsize, k + ell)) {
              ++r.checked;
              const auto fiber = enumerate_fiber(ctx.poset(), f, d, p);
              const auto m = multiplicity(k, ell, f, d, p);
              const std::string where = "F=" + f.to_string() + " D=" + d.to_string() + " P=" + p.to_string();
              if (fiber.size() != m)
                r.failures.push_back("fiber count " + std::to_string(fiber.size()) + " != multiplicity " +
                                     std::to_string(m) + " at " + where);
              std::unordered_map<Monomial, int, MonomialHash> lms;
              for (const auto& g : fiber)
                if (++lms[lm_predicted(ctx, g)] == 2) r.failures.push_back("repeated predicted monomial at " + where);
            }
  return r;
}

SuiteReport verify_subduction(const PieriContext& ctx) {
  SuiteReport r{"subduction", 0, {}};
  const auto& gens = ctx.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      ++r.checked;
      const auto where = gens[i].first.key().to_string() + " * " + gens[j].first.key().to_string();
      const auto product = gens[i].second * gens[j].second;
      const auto result = subduct(ctx, product);
      if (!result.remainder.is_zero()) r.failures.push_back("nonzero remainder for " + where);
      for (std::size_t s = 1; s < result.trace.size(); ++s)
        if (compare_monomials(result.trace[s], result.trace[s - 1]) >= 0) {
          r.failures.push_back("leading monomial did not decrease for " + where);
          break;
        }
      const auto expected = lm_predicted(ctx, chi(gens[i].first) + chi(gens[j].first));
      if (result.trace.empty() || !(result.trace.front() == expected))
        r.failures.push_back("first standard term has the wrong leading monomial for " + where);
    }
  return r;
}

SuiteReport verify_hw(const PieriContext& ctx, unsigned seed, std::size_t samples) {
  SuiteReport r{"hw", 0, {}};
  auto check = [&](const ConePoint& g, const Polynomial& eta, const std::string& where) {
    ++r.checked;
    if (!highest_weight_check(ctx, eta)) r.failures.push_back("not a highest weight vector: " + where);
    try {
      if (!(multidegree_of_polynomial(ctx, eta) == degree_of(g)))
        r.failures.push_back("multidegree differs from the cone degree: " + where);
    } catch (const Error& e) {
      r.failures.push_back(std::string(e.what()) + ": " + where);
    }
  };
  for (const auto& [a, eta] : ctx.generators()) check(chi(a), eta, a.key().to_string());
  for (const auto& g : random_sample(ctx, seed, samples)) check(g, eta_of(ctx, g), point_string(g));
  return r;
}

}  // namespace pieri
