#include "hpdf/catalog.hpp"

#include "hpdf/constructions.hpp"
#include "hpdf/search.hpp"

#include <stdexcept>

namespace hpdf {

DesignFamily sporadic32_family()
{
  const auto g = FiniteGroup::semidirect32();
  auto at = [&](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t c[2] = {x, y};
    return g.from_coords(c);
  };
  Multiset x1{at(0, 0), at(2, 0)};
  Multiset x2{at(1, 0), at(3, 4)};
  Multiset x3{at(0, 1), at(0, 3), at(1, 2), at(1, 5), at(1, 6), at(3, 3)};
  std::vector<Element> rest;
  for (auto e : g.elements())
    if (!x1.contains(e) && !x2.contains(e) && !x3.contains(e))
      rest.push_back(e);
  return DesignFamily(g, {x1, x2, x3, Multiset(std::move(rest))});
}

DesignFamily trivial_hds_family()
{
  return DesignFamily(FiniteGroup::cyclic(4),
                      {Multiset{Element{0}}, Multiset{Element{1}, Element{2}, Element{3}}});
}

std::vector<NamedGroup> abelian_groups_of_order_16()
{
  auto z = FiniteGroup::cyclic;
  std::vector<NamedGroup> out;
  for (auto g : {FiniteGroup::product({z(2), z(2), z(2), z(2)}),
                 FiniteGroup::product({z(2), z(2), z(4)}), FiniteGroup::product({z(2), z(8)}),
                 FiniteGroup::product({z(4), z(4)}), z(16)})
    out.push_back(NamedGroup{g.name(), g});
  return out;
}

std::vector<CatalogEntry> catalog_entries()
{
  std::vector<CatalogEntry> out;
  out.push_back(CatalogEntry{"sporadic-32",
                             "non-abelian Hadamard PDF in Z4:Z8 not coming from a difference set",
                             sporadic32_family()});
  out.push_back(CatalogEntry{"trivial-hds-4", "{D, G \\ D} for the (4,1,0) set D = {0} in Z4",
                             trivial_hds_family()});
  SearchBounds first;
  first.max_results = 1;
  for (const auto &[name, g] : abelian_groups_of_order_16()) {
    auto found = search_hds(g, 2, first);
    if (found.sets.empty())
      continue;
    out.push_back(CatalogEntry{"hds16-" + name,
                               "{D, G \\ D} for the first (16,6,2) set found in " + name,
                               complement_pdf(g, found.sets.front()).family});
  }
  return out;
}

CatalogEntry catalog_entry(const std::string &name)
{
  for (auto &e : catalog_entries())
    if (e.name == name)
      return e;
  throw std::out_of_range("no catalog entry named " + name);
}

std::vector<CatalogCertificate> certify_catalog()
{
  std::vector<CatalogCertificate> out;
  for (const auto &entry : catalog_entries()) {
    CatalogCertificate c{entry.name, verify(entry.family, DiffConvention::RightInverse),
                         verify(entry.family, DiffConvention::LeftInverse), {}};
    if (c.right.kind == FamilyKind::PDF)
      c.certifying.push_back(DiffConvention::RightInverse);
    if (c.left.kind == FamilyKind::PDF)
      c.certifying.push_back(DiffConvention::LeftInverse);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace hpdf
