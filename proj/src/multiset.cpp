#include "hpdf/multiset.hpp"

#include "hpdf/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hpdf {

Multiset::Multiset(std::vector<Element> elements) : items_(std::move(elements))
{
  std::sort(items_.begin(), items_.end());
}

Multiset::Multiset(std::initializer_list<Element> elements)
    : Multiset(std::vector<Element>(elements))
{
}

Multiset Multiset::repeated(const Multiset &x, unsigned mu)
{
  std::vector<Element> out;
  out.reserve(x.size() * mu);
  for (auto e : x.items_)
    for (unsigned i = 0; i < mu; ++i)
      out.push_back(e);
  return Multiset(std::move(out));
}

std::size_t Multiset::multiplicity(Element e) const
{
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::vector<Element> Multiset::support() const
{
  std::vector<Element> out(items_);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Multiset::is_set() const
{
  return std::adjacent_find(items_.begin(), items_.end()) == items_.end();
}

Multiset multiset_sum(const Multiset &a, const Multiset &b)
{
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  std::merge(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
             std::back_inserter(out));
  return Multiset(std::move(out));
}

DesignFamily::DesignFamily(FiniteGroup group, std::vector<Multiset> blocks,
                           std::optional<std::vector<Element>> forbidden)
    : group_(std::move(group)), blocks_(std::move(blocks)), forbidden_(std::move(forbidden))
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (auto e : blocks_[i].elements())
      if (!group_.contains(e))
        throw Error(Errc::GroupMismatch, "block " + std::to_string(i) + " holds index " +
                                             std::to_string(e.index) + " outside " +
                                             group_.name());
  if (forbidden_) {
    std::sort(forbidden_->begin(), forbidden_->end());
    forbidden_->erase(std::unique(forbidden_->begin(), forbidden_->end()), forbidden_->end());
    if (!group_.is_subgroup(*forbidden_))
      throw Error(Errc::NotASubgroup, "forbidden set is not a subgroup of " + group_.name());
  }
}

std::vector<std::size_t> DesignFamily::block_sizes() const
{
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto &b : blocks_)
    out.push_back(b.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t DesignFamily::max_block_size() const
{
  std::size_t m = 0;
  for (const auto &b : blocks_)
    m = std::max(m, b.size());
  return m;
}

const char *kind_name(FamilyKind kind)
{
  switch (kind) {
  case FamilyKind::PDF: return "PDF";
  case FamilyKind::RelativePDF: return "RelativePDF";
  case FamilyKind::DF: return "DF";
  case FamilyKind::SDF: return "SDF";
  case FamilyKind::DS: return "DS";
  case FamilyKind::DifferenceMultiset: return "DifferenceMultiset";
  case FamilyKind::Invalid: return "Invalid";
  }
  return "Invalid";
}

std::optional<FamilyKind> kind_from_name(std::string_view name)
{
  for (auto k : {FamilyKind::PDF, FamilyKind::RelativePDF, FamilyKind::DF, FamilyKind::SDF,
                 FamilyKind::DS, FamilyKind::DifferenceMultiset, FamilyKind::Invalid})
    if (name == kind_name(k))
      return k;
  return std::nullopt;
}

std::string format_sizes(std::span<const std::size_t> sizes)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < sizes.size();) {
    std::size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i])
      ++j;
    if (i)
      os << ',';
    if (j - i > 1)
      os << '^' << (j - i) << ' ';
    os << sizes[i];
    i = j;
  }
  os << ']';
  return os.str();
}

std::string VerificationReport::parameters() const
{
  std::ostringstream os;
  switch (kind) {
  case FamilyKind::Invalid:
    return "invalid";
  case FamilyKind::DS:
  case FamilyKind::DifferenceMultiset:
    os << '(' << v << ',' << (block_sizes.empty() ? 0 : block_sizes.front()) << ','
       << lambda_or_mu << ')';
    break;
  case FamilyKind::RelativePDF:
    os << '(' << v << ',' << h << ',' << format_sizes(block_sizes) << ',' << lambda_or_mu << ')';
    break;
  case FamilyKind::DF:
    if (h > 1) {
      os << '(' << v << ',' << h << ',' << format_sizes(block_sizes) << ',' << lambda_or_mu
         << ')';
      break;
    }
    [[fallthrough]];
  default:
    os << '(' << v << ',' << format_sizes(block_sizes) << ',' << lambda_or_mu << ')';
  }
  return os.str();
}

std::string VerificationReport::summary() const
{
  std::ostringstream os;
  os << kind_name(kind);
  if (witness) {
    os << " at index " << witness->element.index << ": "
       << (witness->reason == WitnessReason::Partition ? "covered " : "difference multiplicity ")
       << witness->actual << ", expected " << witness->expected;
  } else {
    os << ' ' << parameters();
  }
  return os.str();
}

Multiset delta_block(const FiniteGroup &g, const Multiset &x, DiffConvention conv)
{
  const auto items = x.elements();
  std::vector<Element> out;
  out.reserve(items.size() * (items.size() ? items.size() - 1 : 0));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j)
      if (i != j)
        out.push_back(g.difference(items[i], items[j], conv));
  return Multiset(std::move(out));
}

Multiset delta_family(const DesignFamily &family, DiffConvention conv)
{
  Multiset out;
  for (const auto &b : family.blocks())
    out = multiset_sum(out, delta_block(family.group(), b, conv));
  return out;
}

std::vector<std::uint64_t> difference_counts(const DesignFamily &family, DiffConvention conv)
{
  const auto &g = family.group();
  std::vector<std::uint64_t> counts(g.order(), 0);
  for (const auto &block : family.blocks()) {
    const auto items = block.elements();
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j)
        if (i != j)
          ++counts[g.difference(items[i], items[j], conv).index];
  }
  return counts;
}

namespace {

// Tests "counts vanish on H and equal lambda elsewhere" for the subgroup mask.
std::optional<std::uint64_t> uniform_outside(const std::vector<std::uint64_t> &counts,
                                             const std::vector<bool> &in_h)
{
  std::optional<std::uint64_t> lambda;
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (in_h[g]) {
      if (counts[g] != 0)
        return std::nullopt;
    } else if (!lambda) {
      lambda = counts[g];
    } else if (*lambda != counts[g]) {
      return std::nullopt;
    }
  }
  return lambda.value_or(0);
}

} // namespace

VerificationReport verify(const DesignFamily &family, DiffConvention conv)
{
  const auto &group = family.group();
  const auto v = group.order();
  const auto &blocks = family.blocks();

  VerificationReport report;
  report.v = v;
  report.block_sizes = family.block_sizes();
  report.convention = conv;

  const auto counts = difference_counts(family, conv);

  std::vector<std::uint64_t> cover(v, 0);
  for (const auto &b : blocks)
    for (auto e : b.elements())
      ++cover[e.index];
  const bool all_sets =
      std::all_of(blocks.begin(), blocks.end(), [](const Multiset &b) { return b.is_set(); });

  // Strong difference family: constant multiplicity everywhere, identity included.
  const auto id = group.identity().index;
  if (counts[id] > 0 &&
      std::all_of(counts.begin(), counts.end(), [&](auto c) { return c == counts[id]; })) {
    report.kind = blocks.size() == 1 ? FamilyKind::DifferenceMultiset : FamilyKind::SDF;
    report.lambda_or_mu = counts[id];
    return report;
  }

  std::vector<bool> trivial(v, false);
  trivial[id] = true;

  std::vector<bool> in_h = trivial;
  std::optional<std::uint64_t> lambda;
  if (const auto &forbidden = family.forbidden()) {
    in_h.assign(v, false);
    for (auto e : *forbidden)
      in_h[e.index] = true;
    lambda = uniform_outside(counts, in_h);
  } else {
    lambda = uniform_outside(counts, trivial);
    if (!lambda) {
      std::vector<Element> zeros;
      std::vector<bool> zero_mask(v, false);
      for (std::uint32_t g = 0; g < v; ++g)
        if (counts[g] == 0) {
          zeros.push_back(Element{g});
          zero_mask[g] = true;
        }
      if (zeros.size() > 1 && zeros.size() < v && group.is_subgroup(zeros)) {
        lambda = uniform_outside(counts, zero_mask);
        if (lambda)
          in_h = zero_mask;
      }
    }
  }

  const auto h = static_cast<std::uint64_t>(std::count(in_h.begin(), in_h.end(), true));

  if (lambda) {
    report.h = h;
    report.lambda_or_mu = *lambda;
    if (h == 1) {
      bool partition = all_sets;
      for (std::uint32_t g = 0; g < v && partition; ++g)
        partition = cover[g] == 1;
      if (blocks.size() == 1 && all_sets) {
        report.kind = FamilyKind::DS;
      } else if (partition) {
        report.kind = FamilyKind::PDF;
        report.target = PartitionTarget::Group;
      } else {
        report.kind = FamilyKind::DF;
      }
    } else {
      bool partition = all_sets;
      for (std::uint32_t g = 0; g < v && partition; ++g)
        partition = cover[g] == (in_h[g] ? 0u : 1u);
      if (partition) {
        report.kind = FamilyKind::RelativePDF;
        report.target = PartitionTarget::GroupMinusH;
      } else {
        report.kind = FamilyKind::DF;
      }
    }
    return report;
  }

  // Failure: report the first element, in canonical order, that breaks the
  // hypothesis H = forbidden (or {0}).
  if (!family.forbidden())
    in_h = trivial;
  const auto hyp_h = static_cast<std::uint64_t>(std::count(in_h.begin(), in_h.end(), true));
  const auto total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  const auto outside = v - hyp_h;
  const std::uint64_t expected_lambda = outside ? (total + outside / 2) / outside : 0;
  const bool check_partition = all_sets && blocks.size() > 1;

  report.kind = FamilyKind::Invalid;
  report.h = hyp_h;
  for (std::uint32_t g = 0; g < v; ++g) {
    const bool is_h = in_h[g];
    const std::uint64_t want_cover = (hyp_h == 1 || !is_h) ? 1 : 0;
    if (check_partition && cover[g] != want_cover) {
      report.witness = Witness{Element{g}, want_cover, cover[g], WitnessReason::Partition};
      return report;
    }
    const std::uint64_t want = is_h ? 0 : expected_lambda;
    if (counts[g] != want) {
      report.witness = Witness{Element{g}, want, counts[g], WitnessReason::Multiplicity};
      return report;
    }
  }
  // Counts match the rounded lambda everywhere, which cannot happen when the
  // uniformity test failed; keep a witness anyway.
  report.witness = Witness{group.identity(), 0, counts[id], WitnessReason::Multiplicity};
  return report;
}

bool is_hadamard_pdf(const VerificationReport &report)
{
  if (report.kind != FamilyKind::PDF)
    throw Error(Errc::NotAPdf, std::string("report kind is ") + kind_name(report.kind));
  return report.v == 2 * report.lambda_or_mu;
}

} // namespace hpdf
