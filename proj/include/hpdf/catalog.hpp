#pragma once

#include "hpdf/group.hpp"
#include "hpdf/multiset.hpp"

#include <string>
#include <vector>

namespace hpdf {

/// The order-32 family in Z4:Z8 with blocks
///   X1 = {(0,0),(2,0)}, X2 = {(1,0),(3,4)},
///   X3 = {(0,1),(0,3),(1,2),(1,5),(1,6),(3,3)}, X4 = G \ (X1 u X2 u X3).
DesignFamily sporadic32_family();

/// {{0}, {1,2,3}} in Z4, the complement family of the trivial (4,1,0) set.
DesignFamily trivial_hds_family();

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Z2^4, Z2^2 x Z4, Z2 x Z8, Z4 x Z4 and Z16.
std::vector<NamedGroup> abelian_groups_of_order_16();

struct CatalogEntry {
  std::string name;
  std::string description;
  DesignFamily family;
};

/// sporadic-32, trivial-hds-4, and hds16-<group> for every abelian group of
/// order 16 in which search_hds finds a difference set.
std::vector<CatalogEntry> catalog_entries();

/// Throws std::out_of_range for unknown names.
CatalogEntry catalog_entry(const std::string &name);

struct CatalogCertificate {
  std::string name;
  VerificationReport right;
  VerificationReport left;
  /// Conventions under which the entry verifies as a PDF.
  std::vector<DiffConvention> certifying;
};

std::vector<CatalogCertificate> certify_catalog();

} // namespace hpdf
