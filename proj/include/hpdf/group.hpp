#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hpdf {

/// An element of a FiniteGroup, identified by its canonical index.
///
/// The index is the mixed-radix reading of the element's coordinates, first
/// coordinate most significant, so comparing indices is the same as comparing
/// coordinate tuples lexicographically.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// How a - b is formed in a group that need not be abelian.
enum class DiffConvention {
  RightInverse, ///< a + (-b)
  LeftInverse,  ///< (-b) + a
};

const char *convention_name(DiffConvention conv);

class FiniteGroup;

struct CyclicDesc {
  std::uint32_t n;
};

struct ProductDesc {
  std::vector<FiniteGroup> factors;
};

/// Z4 x Z8 with (x1,y1) + (x2,y2) = (x1 + x2, 5^x2 * y1 + y2).
struct Semidirect32Desc {};

struct TableDesc {
  std::uint32_t n;
  std::vector<std::vector<std::uint32_t>> table;
};

using GroupDescriptor = std::variant<CyclicDesc, ProductDesc, Semidirect32Desc, TableDesc>;

/// A finite group written additively. Immutable after construction.
///
/// Products are flattened into a list of leaf factors (cyclic, semidirect32,
/// table) and elements are encoded mixed-radix over those leaves. A cyclic or
/// table leaf contributes one coordinate, the semidirect leaf two.
class FiniteGroup {
public:
  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup product(std::vector<FiniteGroup> factors);
  static FiniteGroup semidirect32();
  /// Validates the table eagerly: closure, identity, inverses and
  /// associativity (exhaustive up to order 64, Light's test above).
  static FiniteGroup table(std::vector<std::vector<std::uint32_t>> rows);
  static FiniteGroup make(GroupDescriptor desc);

  std::uint32_t order() const noexcept { return order_; }
  const GroupDescriptor &descriptor() const noexcept { return *desc_; }
  std::string name() const;

  Element identity() const noexcept { return identity_; }
  bool contains(Element a) const noexcept { return a.index < order_; }
  /// Throws ElementOutOfRange.
  void check(Element a) const;

  Element op(Element a, Element b) const;
  Element neg(Element a) const;
  Element difference(Element a, Element b,
                     DiffConvention conv = DiffConvention::RightInverse) const;

  bool is_abelian() const noexcept { return abelian_; }

  std::vector<std::uint32_t> coords(Element a) const;
  /// Throws ElementOutOfRange when a coordinate exceeds its modulus or the
  /// coordinate count is wrong.
  Element from_coords(std::span<const std::uint32_t> coords) const;
  std::size_t coord_count() const noexcept;

  /// For a group built with product(): combine one element per factor.
  Element join(std::span<const Element> parts) const;
  std::vector<Element> split(Element a) const;
  std::size_t factor_count() const;
  const FiniteGroup &factor(std::size_t i) const;

  /// Closure of the generators under op and neg; sorted, contains identity.
  std::vector<Element> subgroup_elements(std::span<const Element> generators) const;
  bool is_subgroup(std::span<const Element> elements) const;

  std::vector<Element> elements() const;

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b);

private:
  enum class LeafKind { Cyclic, Semidirect32, Table };

  struct Leaf {
    LeafKind kind;
    std::uint32_t order;
    std::uint32_t identity;
    // Row-major Cayley table and inverse table for table leaves.
    std::shared_ptr<const std::vector<std::uint32_t>> table;
    std::shared_ptr<const std::vector<std::uint32_t>> inverse;
  };

  FiniteGroup() = default;
  void finish();

  static std::uint32_t leaf_op(const Leaf &leaf, std::uint32_t a, std::uint32_t b);
  static std::uint32_t leaf_neg(const Leaf &leaf, std::uint32_t a);

  std::shared_ptr<const GroupDescriptor> desc_;
  std::vector<Leaf> leaves_;
  std::uint32_t order_ = 1;
  Element identity_{};
  bool abelian_ = true;
  std::vector<std::uint32_t> neg_;
};

} // namespace hpdf
