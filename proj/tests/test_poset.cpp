#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pieri/error.hpp"
#include "pieri/poset.hpp"

using namespace pieri;

namespace {

GammaElement from_oracle(const std::tuple<int, int, int>& e) {
  const auto [kind, a, b] = e;
  return kind == 0 ? GammaElement::gamma(a, b) : GammaElement::eps(a, b);
}

}  // namespace

TEST_CASE("cardinality") {
  for (int k = 1; k <= 6; ++k)
    for (int ell = 1; ell <= 6; ++ell) {
      const GammaPoset p(k, ell);
      CHECK(p.size() == static_cast<std::size_t>((2 * ell + 1) * k + ell * ell));
      CHECK(p.size() == gamma_cardinality(k, ell));
    }
  CHECK(GammaPoset(1, 1).size() == 4);
  CHECK(GammaPoset(2, 1).size() == 7);
  const GammaPoset p22(2, 2);
  CHECK(p22.size() == 14);
  std::size_t eps = 0;
  for (const auto& e : p22.elements()) eps += e.is_eps() ? 1 : 0;
  CHECK(eps == 1);
  CHECK_THROWS_AS(GammaPoset(0, 1), Error);
  CHECK_THROWS_AS(GammaPoset(1, 0), Error);
}

TEST_CASE("canonical element order") {
  const GammaPoset p(1, 2);
  std::vector<std::string> names;
  for (const auto& e : p.elements()) names.push_back(e.to_string());
  CHECK(names == std::vector<std::string>{"g(-2,1)", "g(-1,1)", "g(0,1)", "g(1,1)", "g(1,2)", "g(2,1)", "g(2,2)",
                                          "g(2,3)", "e(1,2)"});
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.index_of(p.element(i)) == i);
  CHECK_THROWS_AS((void)p.index_of(GammaElement::gamma(3, 1)), Error);
  CHECK_THROWS_AS((void)p.index_of(GammaElement::gamma(-1, 2)), Error);
}

TEST_CASE("order examples") {
  const GammaPoset p(1, 1);
  using G = GammaElement;
  CHECK(p.leq(G::gamma(0, 1), G::gamma(1, 1)));
  CHECK(p.leq(G::gamma(1, 2), G::gamma(0, 1)));
  CHECK(p.leq(G::gamma(0, 1), G::gamma(-1, 1)));
  CHECK(p.leq(G::gamma(1, 2), G::gamma(-1, 1)));
  CHECK_FALSE(p.leq(G::gamma(1, 1), G::gamma(0, 1)));
  CHECK_FALSE(p.leq(G::gamma(1, 1), G::gamma(-1, 1)));
  CHECK(p.hasse_edges().size() == 3);
  CHECK_THROWS_AS((void)p.leq(G::eps(1, 2), G::gamma(0, 1)), Error);

  const GammaPoset q(2, 2);
  CHECK_FALSE(q.leq(G::eps(1, 2), G::gamma(0, 1)));
  CHECK_FALSE(q.leq(G::gamma(0, 1), G::eps(1, 2)));
}

TEST_CASE("order matches the generating relations") {
  for (int k = 1; k <= 3; ++k)
    for (int ell = 1; ell <= 3; ++ell) {
      const GammaPoset p(k, ell);
      const oracle::Poset o(k, ell);
      REQUIRE(o.elements.size() == p.size());
      for (std::size_t a = 0; a < o.elements.size(); ++a)
        for (std::size_t b = 0; b < o.elements.size(); ++b)
          CHECK(p.leq(from_oracle(o.elements[a]), from_oracle(o.elements[b])) == o.leq[a][b]);
    }
}

TEST_CASE("partial order axioms and eps isolation") {
  for (int k = 1; k <= 3; ++k)
    for (int ell = 1; ell <= 3; ++ell) {
      const GammaPoset p(k, ell);
      const auto n = p.size();
      for (std::size_t a = 0; a < n; ++a) {
        CHECK(p.leq(a, a));
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) CHECK_FALSE((p.leq(a, b) && p.leq(b, a)));
          if (a != b && (p.element(a).is_eps() || p.element(b).is_eps())) CHECK_FALSE(p.leq(a, b));
          for (std::size_t c = 0; c < n; ++c)
            if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
        }
      }
    }
}

TEST_CASE("hasse edges are covers whose closure is the order") {
  for (int k = 1; k <= 3; ++k)
    for (int ell = 1; ell <= 3; ++ell) {
      const GammaPoset p(k, ell);
      const auto n = p.size();
      std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) closure[i][i] = true;
      for (const auto& [upper, lower] : p.hasse_edges()) {
        CHECK_FALSE(upper.is_eps());
        CHECK_FALSE(lower.is_eps());
        const auto u = p.index_of(upper), l = p.index_of(lower);
        CHECK(p.leq(l, u));
        CHECK(u != l);
        for (std::size_t m = 0; m < n; ++m)
          if (m != u && m != l) CHECK_FALSE((p.leq(l, m) && p.leq(m, u)));
        closure[l][u] = true;
      }
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t i = 0; i < n; ++i)
          if (closure[i][m])
            for (std::size_t j = 0; j < n; ++j)
              if (closure[m][j]) closure[i][j] = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) CHECK(closure[a][b] == p.leq(a, b));
    }
}
