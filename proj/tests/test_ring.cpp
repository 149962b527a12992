#include "hpdf/error.hpp"
#include "hpdf/ring.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hpdf;

namespace {

RingElement pair(const Ring &r, std::uint32_t a, std::uint32_t b)
{
  const RingElement parts[2] = {RingElement{a}, RingElement{b}};
  return r.join(parts);
}

std::vector<RingElement> elems(std::initializer_list<std::uint32_t> xs)
{
  std::vector<RingElement> out;
  for (auto x : xs)
    out.push_back(RingElement{x});
  return out;
}

} // namespace

TEST_CASE("Galois fields")
{
  auto f5 = Ring::gf(5, 1);
  CHECK(f5.order() == 5);
  CHECK(f5.is_field());
  CHECK(f5.mul(RingElement{3}, RingElement{4}) == RingElement{2});

  auto f9 = Ring::gf(3, 2);
  CHECK(f9.order() == 9);
  CHECK(std::get<GfDesc>(f9.descriptor()).modulus == std::vector<std::uint32_t>{1, 0, 1});
  // x has coefficients (1, 0), i.e. index 3; x*x = -1 = 2
  const std::uint32_t xc[2] = {1, 0};
  const auto x = f9.from_coords(xc);
  CHECK(x == RingElement{3});
  CHECK(f9.mul(x, x) == RingElement{2});

  try {
    Ring::gf(4, 1);
    FAIL("expected NotPrime");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  CHECK_THROWS_AS(Ring::gf(3, 2, {1, 0, 2}), Error); // x^2 + 2 = (x-1)(x+1)
}

TEST_CASE("ring arithmetic")
{
  auto z25 = Ring::zmod(25);
  CHECK(z25.mul(RingElement{7}, RingElement{18}) == RingElement{1});
  CHECK(z25.is_unit(RingElement{7}));
  CHECK_FALSE(z25.is_unit(RingElement{5}));
  CHECK_FALSE(z25.is_field());

  auto f5f7 = Ring::product({Ring::gf(5, 1), Ring::gf(7, 1)});
  CHECK(f5f7.add(pair(f5f7, 2, 3), pair(f5f7, 4, 5)) == pair(f5f7, 1, 1));
  CHECK_FALSE(f5f7.is_unit(pair(f5f7, 0, 3)));
  CHECK(f5f7.is_unit(pair(f5f7, 1, 3)));
  CHECK(f5f7.is_product_of_fields());
  CHECK(f5f7.one() == pair(f5f7, 1, 1));

  auto f49 = Ring::gf(7, 2);
  for (std::uint32_t a = 1; a < 49; ++a)
    REQUIRE(f49.is_unit(RingElement{a}));
  CHECK_FALSE(f49.is_unit(RingElement{0}));
}

TEST_CASE("units of Z_n agree with gcd")
{
  for (std::uint32_t n = 2; n <= 60; ++n) {
    auto r = Ring::zmod(n);
    for (std::uint32_t a = 0; a < n; ++a)
      REQUIRE(r.is_unit(RingElement{a}) == (oracle::gcd(static_cast<int>(a), static_cast<int>(n)) == 1));
  }
}

TEST_CASE("ring axioms on a mixed product")
{
  auto r = Ring::product({Ring::zmod(9), Ring::gf(2, 2)});
  const auto n = r.order();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const RingElement ea{a}, eb{b};
      REQUIRE(r.mul(ea, eb) == r.mul(eb, ea));
      REQUIRE(r.add(ea, r.neg(ea)) == r.zero());
      for (std::uint32_t c = 0; c < n; c += 5)
        REQUIRE(r.mul(ea, r.add(eb, RingElement{c})) ==
                r.add(r.mul(ea, eb), r.mul(ea, RingElement{c})));
    }
  // additive indices match the additive group
  const auto g = r.additive_group();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      REQUIRE(r.add(RingElement{a}, RingElement{b}).index == g.op(Element{a}, Element{b}).index);
}

TEST_CASE("primitive elements")
{
  CHECK(Ring::gf(5, 1).primitive_element() == RingElement{2});
  CHECK(Ring::gf(7, 1).primitive_element() == RingElement{3});
  CHECK(Ring::gf(3, 1).primitive_element() == RingElement{2});
  CHECK_THROWS_AS(Ring::zmod(9).primitive_element(), Error);
}

TEST_CASE("starter representatives")
{
  CHECK(starter_reps(Ring::zmod(5)) == elems({1, 2}));
  CHECK(starter_reps(Ring::zmod(7)) == elems({1, 2, 3}));
  CHECK(starter_reps(Ring::product({Ring::gf(5, 1), Ring::gf(5, 1)})).size() == 12);
  CHECK_THROWS_AS(starter_reps(Ring::zmod(8)), Error);
}

TEST_CASE("diagonal powers")
{
  CHECK(build_y_powers(Ring::gf(7, 1), 3) == elems({3, 2, 6}));
  auto f5f5 = Ring::product({Ring::gf(5, 1), Ring::gf(5, 1)});
  CHECK(build_y_powers(f5f5, 3) ==
        std::vector<RingElement>{pair(f5f5, 2, 2), pair(f5f5, 4, 4), pair(f5f5, 3, 3)});
  auto f5f7 = Ring::product({Ring::gf(5, 1), Ring::gf(7, 1)});
  CHECK(build_y_powers(f5f7, 1) == std::vector<RingElement>{pair(f5f7, 2, 3)});
}

TEST_CASE("Y condition")
{
  auto z7 = Ring::zmod(7);
  CHECK(check_y_condition(z7, elems({3, 2, 6})).ok);

  auto z25 = Ring::zmod(25);
  const auto bad = check_y_condition(z25, elems({1, 2, 3, 4}));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
  const auto [a, b] = *bad.witness;
  CHECK_FALSE(z25.is_unit(z25.sub(a, b)));

  // {u} with 2u a unit
  for (std::uint32_t u : {1u, 6u, 24u})
    CHECK(check_y_condition(z25, elems({u})).ok);
  // a y and its negative together
  CHECK_FALSE(check_y_condition(z7, elems({1, 6})).ok);
  // a non-unit member
  CHECK_FALSE(check_y_condition(z25, elems({5})).ok);
}

TEST_CASE("maximal prime powers and fields_of_order")
{
  const auto pp = maximal_prime_powers(45);
  REQUIRE(pp.size() == 2);
  CHECK(pp[0].q == 9);
  CHECK(pp[1].q == 5);
  CHECK(Ring::fields_of_order(25).is_field());
  CHECK(Ring::fields_of_order(25).order() == 25);
  CHECK(Ring::fields_of_order(35).factor_count() == 2);
  CHECK(is_prime(47));
  CHECK_FALSE(is_prime(49));
}
