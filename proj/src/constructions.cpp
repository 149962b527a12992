#include "hpdf/constructions.hpp"

#include "hpdf/catalog.hpp"
#include "hpdf/error.hpp"
#include "hpdf/search.hpp"

#include <algorithm>
#include <sstream>

namespace hpdf {

namespace {

std::string predicted(FamilyKind kind, std::uint64_t v, std::uint64_t h,
                      std::vector<std::size_t> sizes, std::uint64_t lambda)
{
  VerificationReport r;
  r.kind = kind;
  r.v = v;
  r.h = h;
  std::sort(sizes.begin(), sizes.end());
  r.block_sizes = std::move(sizes);
  r.lambda_or_mu = lambda;
  return r.parameters();
}

std::string element_text(const FiniteGroup &g, Element e)
{
  std::ostringstream os;
  os << '(';
  const auto c = g.coords(e);
  for (std::size_t i = 0; i < c.size(); ++i)
    os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

VerificationReport require_hadamard(const DesignFamily &pdf, DiffConvention conv, Errc code)
{
  auto report = verify(pdf, conv);
  if (report.kind != FamilyKind::PDF || !is_hadamard_pdf(report))
    throw Error(code, "input is not a Hadamard PDF: " + report.summary());
  return report;
}

} // namespace

bool Construction::certified() const
{
  if (!report.ok())
    return false;
  bool kind_ok = report.kind == expected_kind;
  if (expected_kind == FamilyKind::DF)
    kind_ok = kind_ok || report.kind == FamilyKind::PDF || report.kind == FamilyKind::RelativePDF;
  return kind_ok && report.parameters() == expected_parameters;
}

const char *completion_name(Completion c)
{
  return c == Completion::SingleBlock ? "single" : "per-block";
}

Construction complement_pdf(const FiniteGroup &g, const Multiset &d, DiffConvention conv)
{
  if (d.empty() || !d.is_set() || d.size() >= g.order())
    throw Error(Errc::NotADifferenceSet, "D must be a nonempty proper subset of " + g.name());
  const auto ds = verify(DesignFamily(g, {d}), conv);
  if (ds.kind != FamilyKind::DS)
    throw Error(Errc::NotADifferenceSet, ds.summary());

  std::vector<Element> rest;
  for (auto e : g.elements())
    if (!d.contains(e))
      rest.push_back(e);
  DesignFamily family(g, {d, Multiset(std::move(rest))});
  auto report = verify(family, conv);

  const std::uint64_t v = g.order(), k = d.size();
  return Construction{std::move(family), std::move(report), FamilyKind::PDF,
                      predicted(FamilyKind::PDF, v, 1, {k, v - k}, v - 2 * k + 2 * ds.lambda_or_mu)};
}

Construction double_sdf(const DesignFamily &pdf, DiffConvention conv)
{
  const auto base = require_hadamard(pdf, conv, Errc::NotHadamard);
  std::vector<Multiset> blocks;
  std::vector<std::size_t> sizes;
  for (const auto &b : pdf.blocks()) {
    blocks.push_back(Multiset::repeated(b, 2));
    sizes.push_back(2 * b.size());
  }
  DesignFamily family(pdf.group(), std::move(blocks));
  auto report = verify(family, conv);
  return Construction{std::move(family), std::move(report), FamilyKind::SDF,
                      predicted(FamilyKind::SDF, base.v, 1, sizes, 4 * base.lambda_or_mu)};
}

Construction paley_double_sdf(std::uint32_t q)
{
  if (!is_prime(q))
    throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");
  if (q % 4 != 3)
    throw Error(Errc::BadResidueClass, std::to_string(q) + " is not 3 mod 4");
  std::vector<bool> square(q, false);
  for (std::uint64_t x = 1; x < q; ++x)
    square[x * x % q] = true;
  std::vector<Element> rest;
  for (std::uint32_t x = 0; x < q; ++x)
    if (!square[x])
      rest.push_back(Element{x});
  auto g = FiniteGroup::cyclic(q);
  DesignFamily family(g, {Multiset::repeated(Multiset(std::move(rest)), 2)});
  auto report = verify(family);
  return Construction{std::move(family), std::move(report), FamilyKind::DifferenceMultiset,
                      predicted(FamilyKind::DifferenceMultiset, q, 1, {q + 1u}, q + 1u)};
}

std::vector<std::vector<Element>> lifted_difference_lists(const FiniteGroup &gh,
                                                          const std::vector<Multiset> &lifts,
                                                          DiffConvention conv)
{
  if (gh.factor_count() != 2)
    throw Error(Errc::BadDescriptor, "expected a two-factor product G x H");
  std::vector<std::vector<Element>> lists(gh.factor(0).order());
  for (const auto &block : lifts) {
    const auto items = block.elements();
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = 0; j < items.size(); ++j) {
        if (i == j)
          continue;
        const auto parts = gh.split(gh.difference(items[i], items[j], conv));
        lists[parts[0].index].push_back(parts[1]);
      }
  }
  return lists;
}

Construction fundamental_construction(const DesignFamily &sdf, const FiniteGroup &h,
                                      const std::vector<Multiset> &lifts,
                                      const std::vector<Endomorphism> &endos,
                                      std::uint64_t lambda, DiffConvention conv)
{
  const auto &g = sdf.group();
  const auto base = verify(sdf, conv);
  if (base.kind != FamilyKind::SDF && base.kind != FamilyKind::DifferenceMultiset)
    throw Error(Errc::ParameterMismatch, "input is not a strong difference family: " +
                                             base.summary());
  const auto mu = base.lambda_or_mu;
  const auto gh = FiniteGroup::product({g, h});

  if (lifts.size() != sdf.blocks().size())
    throw Error(Errc::ProjectionMismatch, "need one lift per block");
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    std::vector<Element> proj;
    for (auto e : lifts[i].elements()) {
      if (!gh.contains(e))
        throw Error(Errc::ProjectionMismatch, "lift " + std::to_string(i) + " leaves G x H");
      proj.push_back(gh.split(e)[0]);
    }
    if (!(Multiset(std::move(proj)) == sdf.blocks()[i]))
      throw Error(Errc::ProjectionMismatch,
                  "lift " + std::to_string(i) + " does not project onto its block");
  }

  if (mu * endos.size() != lambda * (h.order() - 1))
    throw Error(Errc::ParameterMismatch,
                "mu*e = " + std::to_string(mu * endos.size()) + " but lambda(|H|-1) = " +
                    std::to_string(lambda * (h.order() - 1)));

  for (std::size_t k = 0; k < endos.size(); ++k) {
    const auto &eps = endos[k];
    bool ok = eps.size() == h.order();
    for (std::uint32_t a = 0; a < h.order() && ok; ++a)
      for (std::uint32_t b = 0; b < h.order() && ok; ++b)
        ok = h.contains(eps[a]) &&
             eps[h.op(Element{a}, Element{b}).index] == h.op(eps[a], eps[b]);
    if (!ok)
      throw Error(Errc::NotAnEndomorphism, "map " + std::to_string(k) + " is not an endomorphism");
  }

  const auto lists = lifted_difference_lists(gh, lifts, conv);
  const auto zero = h.identity().index;
  std::vector<std::uint64_t> hits(h.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::fill(hits.begin(), hits.end(), 0);
    for (const auto &eps : endos)
      for (auto y : lists[x])
        ++hits[eps[y.index].index];
    for (std::uint32_t y = 0; y < h.order(); ++y)
      if (hits[y] != (y == zero ? 0 : lambda))
        throw Error(Errc::ConditionFails,
                    "g = " + element_text(g, Element{x}) + ": image of L_g hits " +
                        element_text(h, Element{y}) + " " + std::to_string(hits[y]) + " times");
  }

  std::vector<Multiset> blocks;
  std::vector<std::size_t> sizes;
  for (const auto &lift : lifts)
    for (const auto &eps : endos) {
      std::vector<Element> out;
      for (auto e : lift.elements()) {
        const auto parts = gh.split(e);
        const Element image[2] = {parts[0], eps[parts[1].index]};
        out.push_back(gh.join(image));
      }
      sizes.push_back(out.size());
      blocks.push_back(Multiset(std::move(out)));
    }
  std::vector<Element> forbidden;
  for (auto x : g.elements()) {
    const Element pair[2] = {x, h.identity()};
    forbidden.push_back(gh.join(pair));
  }

  DesignFamily family(gh, std::move(blocks), std::move(forbidden));
  auto report = verify(family, conv);
  return Construction{std::move(family), std::move(report), FamilyKind::DF,
                      predicted(FamilyKind::DF, gh.order(), g.order(), sizes, lambda)};
}

void validate(const ExpansionRecipe &r)
{
  auto fail = [](const std::string &what) { throw Error(Errc::RecipeInvariantViolated, what); };

  const auto report = verify(r.pdf, r.convention);
  if (report.kind != FamilyKind::PDF || !is_hadamard_pdf(report))
    fail("pdf is not a Hadamard PDF (" + report.summary() + ")");
  if (r.ring.order() % 2 == 0)
    fail("ring order " + std::to_string(r.ring.order()) + " is even");
  const auto kmax = r.pdf.max_block_size();
  if (r.y.size() != kmax)
    fail("|Y| = " + std::to_string(r.y.size()) + " but K_max = " + std::to_string(kmax));
  if (!check_y_condition(r.ring, r.y))
    fail("Y has a non-unit difference in Y u -Y");

  const auto &g = r.pdf.group();
  if (r.f_map.size() != g.order())
    fail("f_map has " + std::to_string(r.f_map.size()) + " entries for a group of order " +
         std::to_string(g.order()));
  for (std::size_t i = 0; i < r.pdf.blocks().size(); ++i) {
    std::vector<RingElement> image;
    for (auto d : r.pdf.blocks()[i].elements()) {
      const auto fd = r.f_map[d.index];
      if (std::find(r.y.begin(), r.y.end(), fd) == r.y.end())
        fail("f maps into an element outside Y");
      image.push_back(fd);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      fail("f is not injective on block " + std::to_string(i));
  }

  std::vector<int> seen(r.ring.order(), 0);
  for (auto s : r.starters) {
    if (!r.ring.contains(s) || s == r.ring.zero())
      fail("starter representative out of range or zero");
    ++seen[s.index];
    ++seen[r.ring.neg(s).index];
  }
  for (std::uint32_t x = 1; x < r.ring.order(); ++x)
    if (seen[x] != 1)
      fail("starter representatives do not split H \\ {0} into pairs {h,-h}");
}

namespace {

ExpansionRecipe assemble_recipe(const DesignFamily &pdf, const Ring &ring,
                                std::vector<RingElement> y, Completion completion,
                                DiffConvention conv)
{
  auto starters = starter_reps(ring);
  const auto kmax = pdf.max_block_size();
  if (y.size() < kmax)
    throw Error(Errc::RecipeInvariantViolated, "|Y| = " + std::to_string(y.size()) +
                                                   " is smaller than K_max = " +
                                                   std::to_string(kmax));
  std::vector<RingElement> f(pdf.group().order(), ring.zero());
  for (const auto &block : pdf.blocks()) {
    std::size_t j = 0;
    for (auto d : block.elements())
      f[d.index] = y[j++];
  }
  return ExpansionRecipe{pdf, ring, std::move(y), std::move(f), std::move(starters), completion,
                         conv};
}

} // namespace

ExpansionRecipe make_recipe(const DesignFamily &pdf, const Ring &ring, Completion completion,
                            DiffConvention conv)
{
  require_hadamard(pdf, conv, Errc::NotHadamard);
  if (ring.order() % 2 == 0)
    throw Error(Errc::EvenOrder, ring.name() + " has even order");
  if (!ring.is_product_of_fields())
    throw Error(Errc::NoValidY, ring.name() + " is not a product of fields; supply Y explicitly");
  auto y = build_y_powers(ring, pdf.max_block_size());
  const auto check = check_y_condition(ring, y);
  if (!check)
    throw Error(Errc::NoValidY, "diagonal powers in " + ring.name() + " of length " +
                                    std::to_string(y.size()) + " break the unit condition");
  return assemble_recipe(pdf, ring, std::move(y), completion, conv);
}

ExpansionRecipe make_recipe(const DesignFamily &pdf, const Ring &ring, std::vector<RingElement> y,
                            Completion completion, DiffConvention conv)
{
  require_hadamard(pdf, conv, Errc::NotHadamard);
  if (ring.order() % 2 == 0)
    throw Error(Errc::EvenOrder, ring.name() + " has even order");
  if (!check_y_condition(ring, y))
    throw Error(Errc::NoValidY, "supplied Y breaks the unit condition");
  return assemble_recipe(pdf, ring, std::move(y), completion, conv);
}

Construction relative_expansion(const ExpansionRecipe &r, ExpansionChecks *out)
{
  validate(r);
  const auto conv = r.convention;
  const auto &g = r.pdf.group();
  const auto &ring = r.ring;
  const auto h = ring.additive_group();
  const auto gh = FiniteGroup::product({g, h});
  const auto lambda = verify(r.pdf, conv).lambda_or_mu;

  auto at = [&](Element d, RingElement x) {
    const Element pair[2] = {d, Element{x.index}};
    return gh.join(pair);
  };

  // B_i = sum over d in D_i of {d} x {f(d), -f(d)}
  std::vector<Multiset> lifts;
  for (const auto &block : r.pdf.blocks()) {
    std::vector<Element> b;
    for (auto d : block.elements()) {
      b.push_back(at(d, r.f_map[d.index]));
      b.push_back(at(d, ring.neg(r.f_map[d.index])));
    }
    lifts.push_back(Multiset(std::move(b)));
  }

  ExpansionChecks checks{4 * lambda, true, true, true, true};
  const auto lists = lifted_difference_lists(gh, lifts, conv);
  std::vector<std::uint64_t> hits(ring.order());
  for (const auto &list : lists) {
    if (list.size() != 4 * lambda)
      checks.sizes_uniform = false;
    std::fill(hits.begin(), hits.end(), 0);
    for (auto x : list) {
      ++hits[x.index];
      if (!ring.is_unit(RingElement{x.index}))
        checks.units_only = false;
    }
    for (std::uint32_t x = 0; x < ring.order(); ++x)
      if (hits[x] != hits[ring.neg(RingElement{x}).index])
        checks.negation_closed = false;
  }
  if (!(checks.sizes_uniform && checks.negation_closed && checks.units_only)) {
    if (out)
      *out = checks;
    throw Error(Errc::ConditionFails, "difference lists of the lifted blocks are not 4*lambda "
                                      "unit lists closed under negation");
  }

  std::vector<Endomorphism> endos;
  for (auto s : r.starters)
    endos.push_back(ring.multiplication_table(s));

  auto sdf = double_sdf(r.pdf, conv);
  auto built = fundamental_construction(sdf.family, h, lifts, endos, 2 * lambda, conv);

  // Union over s of e_s(B_i) must be D_i x (H \ {0}).
  const auto per = r.starters.size();
  for (std::size_t i = 0; i < r.pdf.blocks().size() && checks.block_cover; ++i) {
    std::vector<Element> got;
    for (std::size_t s = 0; s < per; ++s) {
      const auto els = built.family.blocks()[i * per + s].elements();
      got.insert(got.end(), els.begin(), els.end());
    }
    std::sort(got.begin(), got.end());
    std::vector<Element> want;
    for (auto d : r.pdf.blocks()[i].elements())
      for (std::uint32_t x = 1; x < ring.order(); ++x)
        want.push_back(at(d, RingElement{x}));
    std::sort(want.begin(), want.end());
    checks.block_cover = got == want;
  }
  if (out)
    *out = checks;
  if (!checks.block_cover)
    throw Error(Errc::ConditionFails, "lifted blocks do not cover D_i x (H \\ {0})");

  std::vector<std::size_t> sizes;
  for (const auto &block : r.pdf.blocks())
    for (std::size_t s = 0; s < per; ++s)
      sizes.push_back(2 * block.size());
  built.expected_kind = FamilyKind::RelativePDF;
  built.expected_parameters =
      predicted(FamilyKind::RelativePDF, gh.order(), g.order(), sizes, 2 * lambda);
  return built;
}

Construction hadamard_expansion(const ExpansionRecipe &r, ExpansionChecks *checks)
{
  auto rel = relative_expansion(r, checks);
  const auto &gh = rel.family.group();
  const auto &g = r.pdf.group();
  const auto zero = gh.factor(1).identity();
  const auto lambda = rel.report.lambda_or_mu;

  auto blocks = rel.family.blocks();
  auto lift = [&](Element d) {
    const Element pair[2] = {d, zero};
    return gh.join(pair);
  };
  if (r.completion == Completion::SingleBlock) {
    std::vector<Element> all;
    for (auto d : g.elements())
      all.push_back(lift(d));
    blocks.push_back(Multiset(std::move(all)));
  } else {
    for (const auto &block : r.pdf.blocks()) {
      std::vector<Element> b;
      for (auto d : block.elements())
        b.push_back(lift(d));
      blocks.push_back(Multiset(std::move(b)));
    }
  }

  std::vector<std::size_t> sizes;
  for (const auto &b : blocks)
    sizes.push_back(b.size());
  DesignFamily family(gh, std::move(blocks));
  auto report = verify(family, r.convention);
  return Construction{std::move(family), std::move(report), FamilyKind::PDF,
                      predicted(FamilyKind::PDF, gh.order(), 1, sizes, lambda)};
}

std::uint32_t first_small_divisor(std::uint32_t m, std::uint32_t bound)
{
  for (const auto &pp : maximal_prime_powers(m))
    if (pp.q <= bound)
      return pp.q;
  return 0;
}

namespace {

void check_odd_modulus(std::uint32_t m)
{
  if (m < 3 || m % 2 == 0)
    throw Error(Errc::ParameterMismatch, "m = 2n+1 must be odd and at least 3, got " +
                                             std::to_string(m));
}

ExpansionPair expand_both(const DesignFamily &pdf, std::uint32_t m)
{
  auto recipe = make_recipe(pdf, Ring::fields_of_order(m), Completion::SingleBlock);
  auto single = hadamard_expansion(recipe);
  recipe.completion = Completion::PerBlock;
  auto per = hadamard_expansion(recipe);
  return ExpansionPair{std::move(single), std::move(per)};
}

void check_hds_divisors(unsigned u, const FiniteGroup &g, std::uint32_t m)
{
  check_odd_modulus(m);
  if (u == 0 || g.order() != 4 * u * u)
    throw Error(Errc::OrderMismatch, g.name() + " does not have order 4u^2 = " +
                                         std::to_string(4 * u * u));
  const auto bound = 4 * u * u + 2 * u;
  if (auto q = first_small_divisor(m, bound))
    throw Error(Errc::DivisorTooSmall, std::to_string(q) + " <= " + std::to_string(bound));
}

} // namespace

ExpansionPair corollary_hds_expansion(unsigned u, const FiniteGroup &g, const Multiset &hds,
                                      std::uint32_t m)
{
  check_hds_divisors(u, g, m);
  const auto ds = verify(DesignFamily(g, {hds}));
  if (ds.kind != FamilyKind::DS || hds.size() != 2 * u * u - u ||
      ds.lambda_or_mu != u * u - u)
    throw Error(Errc::NotADifferenceSet, "not a (4u^2,2u^2-u,u^2-u) difference set: " +
                                             ds.summary());
  return expand_both(complement_pdf(g, hds).family, m);
}

ExpansionPair corollary_hds_expansion(unsigned u, const FiniteGroup &g, std::uint32_t m)
{
  check_hds_divisors(u, g, m);
  SearchBounds bounds;
  bounds.max_results = 1;
  auto found = search_hds(g, u, bounds);
  if (found.sets.empty())
    throw Error(Errc::NoHdsAvailable, "no Hadamard difference set in " + g.name());
  return corollary_hds_expansion(u, g, found.sets.front(), m);
}

ExpansionPair corollary_sporadic_expansion(std::uint32_t m)
{
  check_odd_modulus(m);
  if (auto q = first_small_divisor(m, 44))
    throw Error(Errc::DivisorTooSmall, std::to_string(q) + " <= 44");
  return expand_both(sporadic32_family(), m);
}

} // namespace hpdf
