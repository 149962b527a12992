#include "hpdf/error.hpp"
#include "hpdf/group.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hpdf;
using testing::code_of;

namespace {

Element sd(const FiniteGroup &g, std::uint32_t x, std::uint32_t y)
{
  const std::uint32_t c[2] = {x, y};
  return g.from_coords(c);
}

void check_axioms(const FiniteGroup &g)
{
  const auto n = g.order();
  for (std::uint32_t a = 0; a < n; ++a) {
    const Element ea{a};
    REQUIRE(g.op(ea, g.identity()) == ea);
    REQUIRE(g.op(g.identity(), ea) == ea);
    REQUIRE(g.op(ea, g.neg(ea)) == g.identity());
    REQUIRE(g.op(g.neg(ea), ea) == g.identity());
    REQUIRE(g.difference(ea, ea) == g.identity());
    REQUIRE(g.difference(ea, ea, DiffConvention::LeftInverse) == g.identity());
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        REQUIRE(g.op(g.op(ea, Element{b}), Element{c}) == g.op(ea, g.op(Element{b}, Element{c})));
  }
}

} // namespace

TEST_CASE("cyclic and product groups")
{
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.identity() == Element{0});
  CHECK(z4.op(Element{3}, Element{2}) == Element{1});
  CHECK(z4.neg(Element{1}) == Element{3});
  CHECK(z4.is_abelian());

  auto z7 = FiniteGroup::cyclic(7);
  CHECK(z7.difference(Element{2}, Element{5}) == Element{4});

  auto z4z4 = FiniteGroup::product({z4, z4});
  CHECK(z4z4.order() == 16);
  CHECK(z4z4.name() == "Z4xZ4");
  const std::uint32_t c[2] = {3, 1};
  const auto e = z4z4.from_coords(c);
  CHECK(e.index == 13);
  CHECK(z4z4.coords(e) == std::vector<std::uint32_t>{3, 1});
}

TEST_CASE("semidirect32 follows (x1+x2, 5^x2 y1 + y2)")
{
  auto g = FiniteGroup::semidirect32();
  CHECK(g.order() == 32);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.op(sd(g, 1, 1), sd(g, 1, 0)) == sd(g, 2, 5));
  CHECK(g.op(sd(g, 0, 1), sd(g, 1, 0)) == sd(g, 1, 5));
  CHECK(g.op(sd(g, 2, 0), sd(g, 2, 0)) == sd(g, 0, 0));
  CHECK(g.neg(sd(g, 2, 0)) == sd(g, 2, 0));
  CHECK(g.difference(sd(g, 0, 0), sd(g, 2, 0)) == sd(g, 2, 0));

  // whole table against the independent law
  for (int x1 = 0; x1 < 4; ++x1)
    for (int y1 = 0; y1 < 8; ++y1)
      for (int x2 = 0; x2 < 4; ++x2)
        for (int y2 = 0; y2 < 8; ++y2) {
          auto [x, y] = oracle::sd32_add({x1, y1}, {x2, y2});
          REQUIRE(g.op(sd(g, x1, y1), sd(g, x2, y2)) == sd(g, x, y));
        }
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 8; ++y) {
      auto [nx, ny] = oracle::sd32_neg({x, y});
      REQUIRE(g.neg(sd(g, x, y)) == sd(g, nx, ny));
    }
}

TEST_CASE("group axioms hold exhaustively for small groups")
{
  check_axioms(FiniteGroup::cyclic(12));
  check_axioms(FiniteGroup::semidirect32());
  check_axioms(FiniteGroup::product({FiniteGroup::cyclic(2), FiniteGroup::semidirect32()}));
  check_axioms(FiniteGroup::product(
      {FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)}));
}

TEST_CASE("abelian groups: both conventions give the same differences")
{
  auto g = FiniteGroup::product({FiniteGroup::cyclic(3), FiniteGroup::cyclic(6)});
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b)
      REQUIRE(g.difference(Element{a}, Element{b}, DiffConvention::RightInverse) ==
              g.difference(Element{a}, Element{b}, DiffConvention::LeftInverse));
}

TEST_CASE("table groups are validated")
{
  // S3 as a table, identity at index 2 to exercise a non-zero identity
  auto s3 = FiniteGroup::table({{2, 3, 0, 1, 5, 4},
                                {4, 2, 1, 5, 0, 3},
                                {0, 1, 2, 3, 4, 5},
                                {5, 0, 3, 4, 2, 1},
                                {1, 5, 4, 2, 3, 0},
                                {3, 4, 5, 0, 1, 2}});
  CHECK(s3.identity() == Element{2});
  CHECK_FALSE(s3.is_abelian());
  check_axioms(s3);

  CHECK(code_of([] { FiniteGroup::table({{0, 1}, {1, 1}}); }) == Errc::NoInverse);
  CHECK(code_of([] { FiniteGroup::table({{1, 0}, {0, 0}}); }) == Errc::NoIdentity);
  // a loop of order 5 with every element an involution cannot be a group
  CHECK(code_of([] {
          FiniteGroup::table({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}});
        }) == Errc::NonAssociative);
}

TEST_CASE("table groups above order 64 use Light's test")
{
  const std::uint32_t n = 70;
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      rows[a][b] = (a + b) % n;
  auto g = FiniteGroup::table(rows);
  CHECK(g.order() == n);
  CHECK(g.op(Element{69}, Element{2}) == Element{1});

  // Swap an intercalate (rows 1,36 x columns 2,37): still a Latin square with
  // identity and inverses, but no longer associative.
  auto bad = rows;
  std::swap(bad[1][2], bad[1][37]);
  std::swap(bad[36][2], bad[36][37]);
  CHECK(code_of([&] { FiniteGroup::table(bad); }) == Errc::NonAssociative);
}

TEST_CASE("subgroups")
{
  auto z8 = FiniteGroup::cyclic(8);
  const Element two[1] = {Element{2}};
  CHECK(z8.subgroup_elements(two) ==
        std::vector<Element>{Element{0}, Element{2}, Element{4}, Element{6}});
  CHECK(FiniteGroup::cyclic(5).subgroup_elements({}) == std::vector<Element>{Element{0}});

  auto z4z5 = FiniteGroup::product({FiniteGroup::cyclic(4), FiniteGroup::cyclic(5)});
  const std::uint32_t c[2] = {1, 0};
  const Element gen[1] = {z4z5.from_coords(c)};
  const auto sub = z4z5.subgroup_elements(gen);
  REQUIRE(sub.size() == 4);
  for (std::uint32_t k = 0; k < 4; ++k) {
    const std::uint32_t ck[2] = {k, 0};
    CHECK(sub[k] == z4z5.from_coords(ck));
  }
  CHECK(z4z5.is_subgroup(sub));
  const Element not_sub[2] = {Element{0}, Element{1}};
  CHECK_FALSE(z4z5.is_subgroup(not_sub));
}

TEST_CASE("range errors")
{
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(code_of([&] { z4.op(Element{4}, Element{0}); }) == Errc::ElementOutOfRange);
  const std::uint32_t bad[1] = {9};
  CHECK(code_of([&] { z4.from_coords(bad); }) == Errc::ElementOutOfRange);
}

TEST_CASE("join and split of products")
{
  auto g = FiniteGroup::product({FiniteGroup::semidirect32(), FiniteGroup::cyclic(7)});
  for (std::uint32_t a = 0; a < g.order(); a += 5) {
    const auto parts = g.split(Element{a});
    CHECK(g.join(parts) == Element{a});
  }
  // componentwise law
  const Element p[2] = {Element{9}, Element{3}}, q[2] = {Element{8}, Element{6}};
  const auto s = g.split(g.op(g.join(p), g.join(q)));
  CHECK(s[0] == g.factor(0).op(Element{9}, Element{8}));
  CHECK(s[1] == Element{2});
}
