#pragma once

#include "hpdf/group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hpdf {

/// A finite multiset of group elements, stored as a sorted list with repeats.
class Multiset {
public:
  Multiset() = default;
  explicit Multiset(std::vector<Element> elements);
  Multiset(std::initializer_list<Element> elements);

  /// mu copies of x, i.e. ^mu X.
  static Multiset repeated(const Multiset &x, unsigned mu);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::span<const Element> elements() const noexcept { return items_; }
  std::size_t multiplicity(Element e) const;
  std::vector<Element> support() const;
  bool is_set() const;
  bool contains(Element e) const { return multiplicity(e) > 0; }

  friend bool operator==(const Multiset &, const Multiset &) = default;

private:
  std::vector<Element> items_;
};

Multiset multiset_sum(const Multiset &a, const Multiset &b);

/// A list of blocks in a group, optionally relative to a forbidden subgroup.
class DesignFamily {
public:
  /// Throws GroupMismatch if an element lies outside the group and
  /// NotASubgroup if the forbidden set is not a subgroup.
  DesignFamily(FiniteGroup group, std::vector<Multiset> blocks,
               std::optional<std::vector<Element>> forbidden = std::nullopt);

  const FiniteGroup &group() const noexcept { return group_; }
  const std::vector<Multiset> &blocks() const noexcept { return blocks_; }
  const std::optional<std::vector<Element>> &forbidden() const noexcept { return forbidden_; }

  std::vector<std::size_t> block_sizes() const;
  std::size_t max_block_size() const;

private:
  FiniteGroup group_;
  std::vector<Multiset> blocks_;
  std::optional<std::vector<Element>> forbidden_;
};

enum class FamilyKind { PDF, RelativePDF, DF, SDF, DS, DifferenceMultiset, Invalid };

const char *kind_name(FamilyKind kind);
std::optional<FamilyKind> kind_from_name(std::string_view name);

/// Which set the blocks of a partitioned family cover.
enum class PartitionTarget {
  None,           ///< no partition claimed
  Group,          ///< all of G
  GroupMinusH,    ///< G \ H
};

enum class WitnessReason { Multiplicity, Partition };

struct Witness {
  Element element;
  std::uint64_t expected;
  std::uint64_t actual;
  WitnessReason reason;
};

struct VerificationReport {
  FamilyKind kind = FamilyKind::Invalid;
  std::uint64_t v = 0;
  std::uint64_t h = 1;
  std::vector<std::size_t> block_sizes; // sorted
  std::uint64_t lambda_or_mu = 0;
  PartitionTarget target = PartitionTarget::None;
  DiffConvention convention = DiffConvention::RightInverse;
  std::optional<Witness> witness;

  bool ok() const noexcept { return kind != FamilyKind::Invalid; }
  /// Parameter tuple in the usual notation, e.g. "(28,[^3 2,4,^3 6],4)".
  std::string parameters() const;
  std::string summary() const;
};

/// Renders a sorted size list compactly: [^3 2,4,^3 6].
std::string format_sizes(std::span<const std::size_t> sizes);

/// Differences over ordered pairs of distinct positions in x.
Multiset delta_block(const FiniteGroup &g, const Multiset &x,
                     DiffConvention conv = DiffConvention::RightInverse);

Multiset delta_family(const DesignFamily &family,
                      DiffConvention conv = DiffConvention::RightInverse);

/// Dense multiplicity table of delta_family, indexed by element index.
std::vector<std::uint64_t> difference_counts(const DesignFamily &family,
                                             DiffConvention conv = DiffConvention::RightInverse);

/// Recomputes every parameter from scratch and classifies the family.
///
/// SDF (or DifferenceMultiset for one block) when the difference list is
/// constant on all of G. Otherwise the list must be constant on G \ H and
/// vanish on H, where H is the declared forbidden subgroup, else {0}, else
/// the inferred zero set. Among such families, one set block with H = {0}
/// is a DS; set blocks partitioning G (ordinary) or G \ H (relative) make a
/// PDF / RelativePDF; anything else is a DF. Failures carry the first
/// offending element in canonical order.
VerificationReport verify(const DesignFamily &family,
                          DiffConvention conv = DiffConvention::RightInverse);

/// Throws NotAPdf unless report.kind is PDF.
bool is_hadamard_pdf(const VerificationReport &report);

} // namespace hpdf
