#include "pieri/standard_monomials.hpp"

#include <algorithm>
#include <tuple>

#include "pieri/error.hpp"

namespace pieri {

PieriContext::PieriContext(PosetPtr poset, RingPtr ring) : poset_(std::move(poset)), ring_(std::move(ring)) {}

std::shared_ptr<const PieriContext> PieriContext::create(int n, int k, int ell, bool precompute) {
  if (k < 1 || ell < 1) throw Error("k and ell must be positive");
  if (!(2 * (k + ell) < n)) throw Error("outside stable range: 2(k+ell) < n is required");
  auto ctx = std::make_shared<PieriContext>(make_gamma_poset(k, ell), make_ring(n, k, ell));
  if (!precompute) return ctx;
  for (auto& a : enumerate_generators(ctx->poset_)) {
    auto eta = eta_generator(*ctx, a);
    if (eta.is_zero()) throw Error("generator polynomial vanished for " + a.key().to_string());
    ctx->lookup_.emplace(a.members(), ctx->generators_.size());
    ctx->generators_.emplace_back(std::move(a), std::move(eta));
  }
  return ctx;
}

Polynomial PieriContext::generator(const IncreasingSet& a) const {
  if (!(a.poset() == *poset_)) throw Error("increasing set does not belong to this context");
  const auto it = lookup_.find(a.members());
  if (it == lookup_.end()) return eta_generator(*this, a);
  return generators_[it->second].second;
}

Polynomial eta_cij(const PieriContext& ctx, int c, std::vector<int> i_set, std::vector<int> j_set) {
  const int k = ctx.k();
  const int ell = ctx.ell();
  const auto& ring = ctx.ring();
  if (c < 0 || c > k) throw Error("c must satisfy 0 <= c <= k");
  for (auto* s : {&i_set, &j_set}) {
    std::sort(s->begin(), s->end());
    if (std::adjacent_find(s->begin(), s->end()) != s->end()) throw Error("index sets must not repeat entries");
    for (int v : *s)
      if (v < 1 || v > ell) throw Error("index sets must lie in {1..ell}");
  }
  const int u = static_cast<int>(i_set.size());
  const int v = static_cast<int>(j_set.size());
  if (u > k - c) throw Error("row capacity exceeded");
  if (c + v > ctx.n()) throw Error("c + |J| exceeds n");

  const int size = c + u + v;
  const Polynomial zero(ring);
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(size), std::vector<Polynomial>(size, zero));
  for (int a = 1; a <= c + v; ++a) {
    auto& row = m[static_cast<std::size_t>(a - 1)];
    for (int col = 1; col <= c + u; ++col) row[col - 1] = Polynomial::variable(ring, Variable::x(a, col));
    for (int b = 1; b <= v; ++b) row[c + u + b - 1] = Polynomial::variable(ring, Variable::y(a, j_set[b - 1]));
  }
  for (int b = 1; b <= u; ++b) {
    auto& row = m[static_cast<std::size_t>(c + v + b - 1)];
    for (int col = 1; col <= c + u; ++col) row[col - 1] = Polynomial::variable(ring, Variable::rxk(col, i_set[b - 1]));
  }
  return determinant(ring, m);
}

Polynomial eta_generator(const PieriContext& ctx, const IncreasingSet& a) {
  const auto& key = a.key();
  auto out = eta_cij(ctx, key.c, key.i_set, key.j_set);
  for (const auto& [s, t] : key.z_set) out = out * Polynomial::variable(ctx.ring(), Variable::rkk(s, t));
  return out;
}

Polynomial eta_of(const PieriContext& ctx, const ConePoint& g) {
  auto out = Polynomial::constant(ctx.ring(), 1);
  for (const auto& [coef, set] : standard_decomposition(g).terms)
    out = out * ctx.generator(set).pow(static_cast<unsigned>(coef));
  return out;
}

Monomial lm_predicted(const PieriContext& ctx, const ConePoint& g) {
  const auto& ring = *ctx.ring();
  const int k = ctx.k();
  const int ell = ctx.ell();
  auto val = [&](int level, int idx) {
    return idx <= k + std::max(0, level) ? g.value(GammaElement::gamma(level, idx)) : 0;
  };
  Monomial m(ring.num_vars());
  for (int u = 1; u <= k; ++u) m.set_exponent(ring.index(Variable::x(u, u)), val(0, u));
  for (int b = 1; b <= ell; ++b)
    for (int a = 1; a <= k + b; ++a) m.set_exponent(ring.index(Variable::y(a, b)), val(b, a) - val(b - 1, a));
  for (int j = 1; j <= ell; ++j)
    for (int i = 1; i <= k; ++i) m.set_exponent(ring.index(Variable::rxk(i, j)), val(-j, i) - val(-j + 1, i));
  for (int s = 1; s <= ell; ++s)
    for (int t = s + 1; t <= ell; ++t)
      m.set_exponent(ring.index(Variable::rkk(s, t)), g.value(GammaElement::eps(s, t)));
  return m;
}

std::optional<ConePoint> match_leading_monomial(const PieriContext& ctx, const Monomial& m) {
  const auto& ring = *ctx.ring();
  const auto& poset = *ctx.poset();
  const int k = ctx.k();
  const int ell = ctx.ell();
  std::vector<int> values(poset.size(), 0);
  auto set = [&](const GammaElement& e, int v) { values[poset.index_of(e)] = v; };
  auto get = [&](int level, int idx) {
    return idx <= k + std::max(0, level) ? values[poset.index_of(GammaElement::gamma(level, idx))] : 0;
  };

  // Every variable with a nonzero exponent must be one the formula produces.
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (m.exponent(i) == 0) continue;
    const auto v = ring.variable(i);
    if (v.kind == Variable::Kind::x && v.i != v.j) return std::nullopt;
    if (v.kind == Variable::Kind::y && v.i > k + v.j) return std::nullopt;
  }
  for (int u = 1; u <= k; ++u) set(GammaElement::gamma(0, u), m.exponent(ring.index(Variable::x(u, u))));
  for (int b = 1; b <= ell; ++b)
    for (int a = 1; a <= k + b; ++a)
      set(GammaElement::gamma(b, a), get(b - 1, a) + m.exponent(ring.index(Variable::y(a, b))));
  for (int j = 1; j <= ell; ++j)
    for (int i = 1; i <= k; ++i)
      set(GammaElement::gamma(-j, i), get(-j + 1, i) + m.exponent(ring.index(Variable::rxk(i, j))));
  for (int s = 1; s <= ell; ++s)
    for (int t = s + 1; t <= ell; ++t) set(GammaElement::eps(s, t), m.exponent(ring.index(Variable::rkk(s, t))));
  if (!is_member(poset, values)) return std::nullopt;
  return ConePoint(ctx.poset(), std::move(values));
}

SubductionResult subduct(const PieriContext& ctx, const Polynomial& p) {
  if (p.is_zero()) throw Error("cannot subduct the zero polynomial");
  SubductionResult out{{}, p, {}};
  auto& current = out.remainder;
  while (!current.is_zero()) {
    const auto lm = current.leading_monomial();
    const auto g = match_leading_monomial(ctx, lm);
    if (!g) break;
    const auto eta = eta_of(ctx, *g);
    if (!(eta.leading_monomial() == lm)) break;
    const Integer& lead = eta.leading_coefficient();
    if (current.leading_coefficient() % lead != 0) break;
    const Integer coef = current.leading_coefficient() / lead;
    out.trace.push_back(lm);
    out.combination.terms.emplace_back(coef, *g);
    current = current - coef * eta;
  }
  return out;
}

bool highest_weight_check(const PieriContext& ctx, const Polynomial& p) {
  const auto& ring = ctx.ring();
  auto var = [&](const Variable& v) { return Polynomial::variable(ring, v); };
  for (int i = 1; i < ctx.n(); ++i) {
    Derivation d;
    for (int c = 1; c <= ctx.k(); ++c) d.emplace_back(Variable::x(i + 1, c), var(Variable::x(i, c)));
    for (int j = 1; j <= ctx.ell(); ++j) d.emplace_back(Variable::y(i + 1, j), var(Variable::y(i, j)));
    if (!apply_derivation(d, p).is_zero()) return false;
  }
  for (int i = 1; i < ctx.k(); ++i) {
    Derivation e;
    for (int a = 1; a <= ctx.n(); ++a) e.emplace_back(Variable::x(a, i + 1), var(Variable::x(a, i)));
    for (int j = 1; j <= ctx.ell(); ++j) e.emplace_back(Variable::rxk(i + 1, j), var(Variable::rxk(i, j)));
    if (!apply_derivation(e, p).is_zero()) return false;
  }
  return true;
}

MultiDegree multidegree_of_polynomial(const PieriContext& ctx, const Polynomial& p) {
  if (p.is_zero()) throw Error("the zero polynomial has no multidegree");
  const auto& ring = *ctx.ring();
  using Degrees = std::vector<int>;
  std::optional<std::tuple<Degrees, Degrees, Degrees>> first;
  for (const auto& term : p.terms()) {
    Degrees f(static_cast<std::size_t>(ctx.n()), 0);
    Degrees d(static_cast<std::size_t>(ctx.k()), 0);
    Degrees q(static_cast<std::size_t>(ctx.ell()), 0);
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
      const int e = term.monomial.exponent(i);
      if (e == 0) continue;
      const auto v = ring.variable(i);
      switch (v.kind) {
        case Variable::Kind::x:
          f[v.i - 1] += e;
          d[v.j - 1] += e;
          break;
        case Variable::Kind::y:
          f[v.i - 1] += e;
          q[v.j - 1] += e;
          break;
        case Variable::Kind::rxk:
          d[v.i - 1] += e;
          q[v.j - 1] += e;
          break;
        case Variable::Kind::rkk:
          q[v.i - 1] += e;
          q[v.j - 1] += e;
          break;
      }
    }
    auto current = std::make_tuple(std::move(f), std::move(d), std::move(q));
    if (!first) first = std::move(current);
    else if (*first != current) throw Error("not multihomogeneous");
  }
  auto& [f, d, q] = *first;
  if (!std::is_sorted(f.rbegin(), f.rend()) || !std::is_sorted(d.rbegin(), d.rend()))
    throw Error("degrees do not form Young diagrams");
  return {YoungDiagram(f), YoungDiagram(d), Composition(q)};
}

}  // namespace pieri
