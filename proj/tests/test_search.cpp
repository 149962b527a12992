#include "hpdf/catalog.hpp"
#include "hpdf/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hpdf;
using testing::code_of;

namespace {

// Number of 6-subsets of Z_r1 x ... x Z_rk (order 16) that are (16,6,2)
// difference sets, with the group law done coordinatewise on plain ints.
int count_hds16(const std::vector<int> &radices)
{
  const int n = 16;
  std::vector<std::vector<int>> coord(n);
  for (int i = 0; i < n; ++i) {
    int rest = i;
    coord[i].resize(radices.size());
    for (std::size_t k = radices.size(); k-- > 0;) {
      coord[i][k] = rest % radices[k];
      rest /= radices[k];
    }
  }
  auto sub = [&](int a, int b) {
    int idx = 0;
    for (std::size_t k = 0; k < radices.size(); ++k)
      idx = idx * radices[k] + ((coord[a][k] - coord[b][k]) % radices[k] + radices[k]) % radices[k];
    return idx;
  };
  int found = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 6)
      continue;
    int cnt[16] = {};
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u)
        for (int b = 0; b < n; ++b)
          if (a != b && (mask >> b & 1u))
            ++cnt[sub(a, b)];
    bool ok = true;
    for (int g = 1; g < n && ok; ++g)
      ok = cnt[g] == 2;
    found += ok;
  }
  return found;
}

std::vector<int> radices_of(const std::string &name)
{
  if (name == "Z2xZ2xZ2xZ2")
    return {2, 2, 2, 2};
  if (name == "Z2xZ2xZ4")
    return {2, 2, 4};
  if (name == "Z2xZ8")
    return {2, 8};
  if (name == "Z4xZ4")
    return {4, 4};
  return {16};
}

Multiset translate(const FiniteGroup &g, const Multiset &d, Element t)
{
  std::vector<Element> out;
  for (auto x : d.elements())
    out.push_back(g.op(x, t));
  return Multiset(std::move(out));
}

} // namespace

TEST_CASE("trivial difference set in Z4")
{
  const auto r = search_hds(FiniteGroup::cyclic(4), 1);
  REQUIRE(r.sets.size() == 1);
  CHECK(r.sets.front() == Multiset{Element{0}});
  CHECK(r.complete);
}

TEST_CASE("order mismatch")
{
  CHECK(code_of([] { search_hds(FiniteGroup::cyclic(12), 2); }) == Errc::OrderMismatch);
}

TEST_CASE("difference sets of the abelian groups of order 16")
{
  for (const auto &[name, g] : abelian_groups_of_order_16()) {
    CAPTURE(name);
    const auto r = search_hds(g, 2);
    CHECK(r.complete);
    const int total = count_hds16(radices_of(name));
    // a (16,6,2) set has no nontrivial translation stabilizer, so every
    // translation class has 16 members
    CHECK(total % 16 == 0);
    CHECK(static_cast<int>(r.sets.size()) == total / 16);
    if (name == "Z16")
      CHECK(r.sets.empty());
    else
      CHECK_FALSE(r.sets.empty());

    REQUIRE(r.reports.size() == r.sets.size());
    std::set<std::vector<Element>> seen;
    for (std::size_t i = 0; i < r.sets.size(); ++i) {
      const auto &d = r.sets[i];
      CHECK(r.reports[i].kind == FamilyKind::DS);
      CHECK(r.reports[i].parameters() == "(16,6,2)");
      CHECK(d.contains(g.identity()));
      for (std::uint32_t t = 0; t < g.order(); ++t) {
        const auto moved = translate(g, d, Element{t});
        CHECK(verify(DesignFamily(g, {moved})).kind == FamilyKind::DS);
        // no other result lies in this translation class
        const auto key = std::vector<Element>(moved.elements().begin(), moved.elements().end());
        CHECK(seen.insert(key).second);
      }
    }
    CHECK(std::is_sorted(r.sets.begin(), r.sets.end(), [](const Multiset &a, const Multiset &b) {
      return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                          b.elements().begin(), b.elements().end());
    }));
  }
}

TEST_CASE("search is deterministic across worker counts")
{
  const auto g = FiniteGroup::product({FiniteGroup::cyclic(2), FiniteGroup::cyclic(8)});
  SearchBounds one;
  one.workers = 1;
  SearchBounds many;
  many.workers = 4;
  CHECK(search_hds(g, 2, one).sets == search_hds(g, 2, many).sets);
}

TEST_CASE("maximum unit sets Y")
{
  const auto f7 = max_unit_y_search(Ring::gf(7, 1));
  CHECK(f7.max_size == 3);
  CHECK(check_y_condition(Ring::gf(7, 1), f7.witness).ok);

  const auto z9 = max_unit_y_search(Ring::zmod(9));
  CHECK(z9.max_size == static_cast<std::size_t>(oracle::zmod_max_unit_y(9)));

  const auto z25 = Ring::zmod(25);
  const auto r25 = max_unit_y_search(z25);
  CHECK(r25.complete);
  CHECK(check_y_condition(z25, r25.witness).ok);
  CHECK(r25.witness.size() == r25.max_size);
  int size3 = -1;
  CHECK(static_cast<std::size_t>(oracle::zmod_max_unit_y(25, &size3, 3)) == r25.max_size);
  CHECK(r25.max_size == 2);
  CHECK(size3 == 0);

  CHECK(code_of([] { max_unit_y_search(Ring::zmod(10)); }) == Errc::EvenOrder);
}

TEST_CASE("maximum unit sets agree with subset enumeration on small Z_n")
{
  for (int n = 3; n <= 35; n += 2) {
    int phi = 0;
    for (int a = 1; a < n; ++a)
      phi += oracle::gcd(a, n) == 1;
    if (phi > 20)
      continue;
    CAPTURE(n);
    const auto r = max_unit_y_search(Ring::zmod(static_cast<std::uint32_t>(n)));
    CHECK(r.max_size == static_cast<std::size_t>(oracle::zmod_max_unit_y(n)));
  }
}

TEST_CASE("catalog certification")
{
  const auto certs = certify_catalog();
  CHECK(certs.size() >= 3);
  for (const auto &c : certs) {
    CAPTURE(c.name);
    CHECK(c.right.kind == FamilyKind::PDF);
    CHECK(is_hadamard_pdf(c.right));
    CHECK_FALSE(c.certifying.empty());
  }
  const auto sp = std::find_if(certs.begin(), certs.end(),
                               [](const auto &c) { return c.name == "sporadic-32"; });
  REQUIRE(sp != certs.end());
  CHECK(sp->right.parameters() == "(32,[^2 2,6,22],16)");
  // Both conventions certify this family; see the README.
  CHECK(sp->certifying.size() == 2);

  CHECK_THROWS_AS(catalog_entry("no-such-entry"), std::out_of_range);
  CHECK(verify(catalog_entry("trivial-hds-4").family).parameters() == "(4,[1,3],2)");
}
