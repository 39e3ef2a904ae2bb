#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pieri/cone.hpp"
#include "pieri/error.hpp"

using namespace pieri;
using G = GammaElement;

namespace {

oracle::Rows rows_of(const YoungDiagram& d) { return {d.rows().begin(), d.rows().end()}; }
std::vector<int> parts_of(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

bool interlace(std::span<const int> a, std::span<const int> b) {
  auto at = [](std::span<const int> v, std::size_t i) { return i < v.size() ? v[i] : 0; };
  const auto n = std::max(a.size(), b.size()) + 1;
  for (std::size_t j = 0; j < n; ++j)
    if (!(at(a, j) >= at(b, j) && at(b, j) >= at(a, j + 1))) return false;
  return true;
}

/// Nonnegative values, adjacent rows interlacing away from level 0.
bool member_by_rows(const GammaPoset& p, const std::vector<int>& values) {
  for (int v : values)
    if (v < 0) return false;
  auto row_of = [&](int level) {
    const auto off = p.row_offset(level);
    return std::span<const int>(values).subspan(off, static_cast<std::size_t>(p.row_length(level)));
  };
  for (int s = 0; s < p.ell(); ++s)
    if (!interlace(row_of(s + 1), row_of(s)) || !interlace(row_of(-s - 1), row_of(-s))) return false;
  return true;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto p = make_gamma_poset(1, 1);
  CHECK(is_member(*p, std::vector<int>(4, 0)));
  CHECK(is_member(*p, std::vector<int>(4, 3)));
  std::map<GammaElement, int> f{{G::gamma(-1, 1), 0}, {G::gamma(0, 1), 1}, {G::gamma(1, 1), 0}, {G::gamma(1, 2), 0}};
  CHECK_FALSE(is_member(*p, f));
  f.erase(G::gamma(1, 2));
  CHECK_THROWS_AS((void)is_member(*p, f), Error);
  CHECK_THROWS_AS(ConePoint(p, {0, 1, 0, 0}), Error);
  CHECK(ConePoint::zero(p).max_value() == 0);
}

TEST_CASE("membership is interlacing rows with nonnegative values") {
  for (auto [k, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const GammaPoset p(k, ell);
    const auto n = p.size();
    std::vector<int> values(n, 0);
    std::size_t members = 0;
    // All value vectors over {0,1,2}.
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      auto c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) values[i] = static_cast<int>(c % 3);
      const bool m = is_member(p, values);
      CHECK(m == member_by_rows(p, values));
      members += m ? 1 : 0;
    }
    CHECK(members > 0);
  }
}

TEST_CASE("rows and functionals") {
  const auto p = make_gamma_poset(1, 1);
  const auto zero = ConePoint::zero(p);
  CHECK(row(zero, -1) == Composition{0});
  CHECK(row(zero, 1) == Composition{0, 0});
  CHECK_THROWS_AS(row(zero, 2), Error);

  const auto f = ConePoint::from_map(
      p, {{G::gamma(-1, 1), 1}, {G::gamma(0, 1), 0}, {G::gamma(1, 1), 1}, {G::gamma(1, 2), 0}});
  const auto fn = functionals(f);
  CHECK(fn.a == Composition{1});
  CHECK(fn.b == Composition{1});
  CHECK(fn.p == Composition{2});
  const auto block = block_of(f);
  CHECK(block.e.empty());
  CHECK(block.a == Composition{1});
  CHECK(block.b == Composition{1});

  const auto z = functionals(zero);
  CHECK(z.a == Composition{0});
  CHECK(z.p == Composition{0});
  const auto dz = degree_of(zero);
  CHECK(dz.f.empty());
  CHECK(dz.d.empty());
  CHECK(dz.p == Composition{0});

  const auto full = make_gamma_poset(2, 2);
  const ConePoint ones(full, std::vector<int>(full->size(), 1));
  for (int level = -2; level <= 2; ++level) CHECK(row(ones, level) == Composition(std::vector<int>(2 + std::max(0, level), 1)));
}

TEST_CASE("S(A,B,C)") {
  CHECK(s_of_abc(Composition{1, 0}, Composition{0, 1}, PairArray(2, {2})) == Composition{3, 3});
  CHECK(s_of_abc(Composition{0, 0}, Composition{0, 0}, PairArray(2)) == Composition{0, 0});
  CHECK(s_of_abc(Composition{2}, Composition{3}, PairArray(1)) == Composition{5});
  CHECK(s_of_abc(Composition{1, 0, 2}, Composition{0, 0, 0}, PairArray(3, {1, 0, 1})) == Composition{2, 2, 3});
  CHECK_THROWS_AS(s_of_abc(Composition{1}, Composition{0, 1}, PairArray(2)), Error);
}

TEST_CASE("additivity of functionals and degrees on random members") {
  std::mt19937_64 rng(7);
  for (auto [k, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const auto p = make_gamma_poset(k, ell);
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_member(p, 4, rng);
      const auto g = random_member(p, 4, rng);
      CHECK(f.max_value() <= 4);
      const auto h = f + g;
      CHECK(h == g + f);
      CHECK(f + ConePoint::zero(p) == f);
      const auto ff = functionals(f), fg = functionals(g), fh = functionals(h);
      CHECK(fh.a == ff.a + fg.a);
      CHECK(fh.b == ff.b + fg.b);
      CHECK(fh.p == ff.p + fg.p);
      for (int s = 1; s <= ell; ++s)
        for (int t = s + 1; t <= ell; ++t) CHECK(fh.c.at(s, t) == ff.c.at(s, t) + fg.c.at(s, t));
      const auto df = degree_of(f), dg = degree_of(g), dh = degree_of(h);
      CHECK(dh.p == df.p + dg.p);
      CHECK(rows_of(dh.f) == rows_of(YoungDiagram([&] {
              std::vector<int> v(static_cast<std::size_t>(k + ell));
              for (std::size_t i = 0; i < v.size(); ++i) v[i] = df.f.row(i) + dg.f.row(i);
              return v;
            }())));
      CHECK(s_of_abc(ff.a, ff.b, ff.c) == ff.p);
      const auto b = block_of(f);
      CHECK(s_of_abc(b.a, b.b, b.c) == df.p);
      CHECK(b.e == YoungDiagram(parts_of(row(f, 0))));
      for (int i = 0; i < ell; ++i) {
        CHECK(interlaces(YoungDiagram(parts_of(row(f, i + 1))), YoungDiagram(parts_of(row(f, i)))));
        CHECK(interlaces(YoungDiagram(parts_of(row(f, -i - 1))), YoungDiagram(parts_of(row(f, -i)))));
      }
    }
  }
  CHECK_THROWS_AS(add(ConePoint::zero(make_gamma_poset(1, 1)), ConePoint::zero(make_gamma_poset(2, 1))), Error);
}

TEST_CASE("fiber examples") {
  const auto p = make_gamma_poset(1, 1);
  const YoungDiagram one{1};
  CHECK(enumerate_fiber(p, YoungDiagram{}, one, Composition{1}).size() == 1);
  CHECK(enumerate_fiber(p, one, one, Composition{1}).empty());
  CHECK(enumerate_fiber(p, YoungDiagram{2}, one, Composition{1}).size() == 1);

  const auto q = make_gamma_poset(2, 2);
  const YoungDiagram d{3, 1};
  const auto fiber = enumerate_fiber(q, d, d, Composition{0, 0});
  REQUIRE(fiber.size() == 1);
  for (int level = -2; level <= 2; ++level) CHECK(row(fiber[0], level) == Composition(d.padded(static_cast<std::size_t>(2 + std::max(0, level)))));

  CHECK_THROWS_AS(enumerate_fiber(p, one, YoungDiagram{1, 1}, Composition{1}), Error);
  CHECK_THROWS_AS(enumerate_fiber(p, YoungDiagram{1, 1, 1}, one, Composition{1}), Error);
  CHECK_THROWS_AS(enumerate_fiber(p, one, one, Composition{1, 1}), Error);
}

TEST_CASE("fibers match the chain-count oracle and split into Kostka blocks") {
  for (auto [k, ell] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const auto p = make_gamma_poset(k, ell);
    for (int dsize = 0; dsize <= 2; ++dsize)
      for (const auto& d : partitions(dsize, k))
        for (int total = 0; total <= 3; ++total)
          for (const auto& pp : bounded_compositions(total, std::vector<int>(static_cast<std::size_t>(ell), 2)))
            for (int fsize = 0; fsize <= dsize + total; ++fsize)
              for (const auto& f : partitions(fsize, k + ell)) {
                const auto fiber = enumerate_fiber(p, f, d, pp);
                CHECK(fiber.size() == oracle::multiplicity(k, rows_of(f), rows_of(d), parts_of(pp)));
                if ((dsize + total - fsize) % 2 != 0) CHECK(fiber.empty());
                std::map<BlockKey, std::uint64_t> blocks;
                for (std::size_t i = 0; i < fiber.size(); ++i) {
                  const auto deg = degree_of(fiber[i]);
                  CHECK(deg.f == f);
                  CHECK(deg.d == d);
                  CHECK(deg.p == pp);
                  if (i > 0) CHECK(fiber[i - 1] < fiber[i]);
                  ++blocks[block_of(fiber[i])];
                }
                for (const auto& [key, count] : blocks)
                  CHECK(count == kostka(SkewShape(f, key.e), key.a) * kostka(SkewShape(d, key.e), key.b));
              }
  }
}
