#include "hpdf/group.hpp"

#include "hpdf/error.hpp"

#include <algorithm>
#include <sstream>

namespace hpdf {

const char *convention_name(DiffConvention conv)
{
  return conv == DiffConvention::RightInverse ? "right" : "left";
}

namespace {

// 5^x mod 8 only depends on the parity of x.
constexpr std::uint32_t pow5_mod8(std::uint32_t x) { return (x & 1u) ? 5u : 1u; }

bool descriptors_equal(const GroupDescriptor &a, const GroupDescriptor &b);

struct DescEqual {
  const GroupDescriptor &other;

  bool operator()(const CyclicDesc &a) const
  {
    auto b = std::get_if<CyclicDesc>(&other);
    return b && a.n == b->n;
  }
  bool operator()(const Semidirect32Desc &) const
  {
    return std::holds_alternative<Semidirect32Desc>(other);
  }
  bool operator()(const TableDesc &a) const
  {
    auto b = std::get_if<TableDesc>(&other);
    return b && a.table == b->table;
  }
  bool operator()(const ProductDesc &a) const
  {
    auto b = std::get_if<ProductDesc>(&other);
    if (!b || a.factors.size() != b->factors.size())
      return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
      if (!(a.factors[i] == b->factors[i]))
        return false;
    return true;
  }
};

bool descriptors_equal(const GroupDescriptor &a, const GroupDescriptor &b)
{
  return std::visit(DescEqual{b}, a);
}

} // namespace

FiniteGroup FiniteGroup::cyclic(std::uint32_t n)
{
  if (n == 0)
    throw Error(Errc::BadDescriptor, "cyclic group of order 0");
  FiniteGroup g;
  g.desc_ = std::make_shared<const GroupDescriptor>(CyclicDesc{n});
  g.leaves_.push_back(Leaf{LeafKind::Cyclic, n, 0, nullptr, nullptr});
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::semidirect32()
{
  FiniteGroup g;
  g.desc_ = std::make_shared<const GroupDescriptor>(Semidirect32Desc{});
  g.leaves_.push_back(Leaf{LeafKind::Semidirect32, 32, 0, nullptr, nullptr});
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::product(std::vector<FiniteGroup> factors)
{
  if (factors.empty())
    throw Error(Errc::BadDescriptor, "product with no factors");
  FiniteGroup g;
  std::uint64_t order = 1;
  for (const auto &f : factors) {
    order *= f.order();
    if (order > (1u << 24))
      throw Error(Errc::BadDescriptor, "group order too large");
    g.leaves_.insert(g.leaves_.end(), f.leaves_.begin(), f.leaves_.end());
  }
  g.desc_ = std::make_shared<const GroupDescriptor>(ProductDesc{std::move(factors)});
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::table(std::vector<std::vector<std::uint32_t>> rows)
{
  const auto n = static_cast<std::uint32_t>(rows.size());
  if (n == 0)
    throw Error(Errc::BadDescriptor, "empty group table");
  std::vector<std::uint32_t> flat;
  flat.reserve(std::size_t{n} * n);
  for (const auto &row : rows) {
    if (row.size() != n)
      throw Error(Errc::BadDescriptor, "group table is not square");
    for (auto v : row) {
      if (v >= n)
        throw Error(Errc::BadDescriptor, "group table entry out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](std::uint32_t a, std::uint32_t b) { return flat[std::size_t{a} * n + b]; };

  std::uint32_t e = n;
  for (std::uint32_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a)
      ok = at(c, a) == a && at(a, c) == a;
    if (ok)
      e = c;
  }
  if (e == n)
    throw Error(Errc::NoIdentity, "table has no two-sided identity");

  std::vector<std::uint32_t> inv(n, n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (at(a, b) == e && at(b, a) == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] == n)
      throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  auto fail_assoc = [](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::ostringstream os;
    os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
    throw Error(Errc::NonAssociative, os.str());
  };

  if (n <= 64) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            fail_assoc(a, b, c);
  } else {
    // Light's test over a generating set. Generators are picked greedily; the
    // left-normed products reachable from them must cover the table.
    std::vector<std::uint32_t> gens;
    std::vector<bool> reached(n, false);
    std::size_t count = 0;
    while (count < n) {
      std::uint32_t pick = 0;
      while (reached[pick])
        ++pick;
      gens.push_back(pick);
      std::vector<std::uint32_t> frontier;
      for (std::uint32_t a = 0; a < n; ++a)
        if (reached[a])
          frontier.push_back(a);
      for (auto gen : gens)
        if (!reached[gen]) {
          reached[gen] = true;
          ++count;
          frontier.push_back(gen);
        }
      while (!frontier.empty()) {
        auto a = frontier.back();
        frontier.pop_back();
        for (auto gen : gens) {
          auto c = at(a, gen);
          if (!reached[c]) {
            reached[c] = true;
            ++count;
            frontier.push_back(c);
          }
        }
      }
    }
    for (auto gen : gens)
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          if (at(at(a, gen), b) != at(a, at(gen, b)))
            fail_assoc(a, gen, b);
  }

  FiniteGroup g;
  g.desc_ = std::make_shared<const GroupDescriptor>(TableDesc{n, std::move(rows)});
  g.leaves_.push_back(Leaf{LeafKind::Table, n, e,
                           std::make_shared<const std::vector<std::uint32_t>>(std::move(flat)),
                           std::make_shared<const std::vector<std::uint32_t>>(std::move(inv))});
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::make(GroupDescriptor desc)
{
  return std::visit(
      [](auto &&d) -> FiniteGroup {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CyclicDesc>)
          return cyclic(d.n);
        else if constexpr (std::is_same_v<T, ProductDesc>)
          return product(std::move(d.factors));
        else if constexpr (std::is_same_v<T, Semidirect32Desc>)
          return semidirect32();
        else {
          if (d.table.size() != d.n)
            throw Error(Errc::BadDescriptor, "table size does not match n");
          return table(std::move(d.table));
        }
      },
      std::move(desc));
}

void FiniteGroup::finish()
{
  std::uint32_t order = 1;
  std::uint32_t id = 0;
  for (const auto &leaf : leaves_) {
    order *= leaf.order;
    id = id * leaf.order + leaf.identity;
  }
  order_ = order;
  identity_ = Element{id};

  abelian_ = true;
  for (const auto &leaf : leaves_) {
    if (leaf.kind == LeafKind::Semidirect32)
      abelian_ = false;
    else if (leaf.kind == LeafKind::Table) {
      for (std::uint32_t a = 0; a < leaf.order && abelian_; ++a)
        for (std::uint32_t b = a + 1; b < leaf.order && abelian_; ++b)
          abelian_ = leaf_op(leaf, a, b) == leaf_op(leaf, b, a);
    }
  }

  neg_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    std::uint32_t rest = a;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (auto it = leaves_.rbegin(); it != leaves_.rend(); ++it) {
      auto local = rest % it->order;
      rest /= it->order;
      out += leaf_neg(*it, local) * scale;
      scale *= it->order;
    }
    neg_[a] = out;
  }
}

std::uint32_t FiniteGroup::leaf_op(const Leaf &leaf, std::uint32_t a, std::uint32_t b)
{
  switch (leaf.kind) {
  case LeafKind::Cyclic: {
    auto s = a + b;
    return s >= leaf.order ? s - leaf.order : s;
  }
  case LeafKind::Semidirect32: {
    const auto x1 = a >> 3, y1 = a & 7u;
    const auto x2 = b >> 3, y2 = b & 7u;
    const auto x = (x1 + x2) & 3u;
    const auto y = (pow5_mod8(x2) * y1 + y2) & 7u;
    return (x << 3) | y;
  }
  case LeafKind::Table:
    return (*leaf.table)[std::size_t{a} * leaf.order + b];
  }
  return 0;
}

std::uint32_t FiniteGroup::leaf_neg(const Leaf &leaf, std::uint32_t a)
{
  switch (leaf.kind) {
  case LeafKind::Cyclic:
    return a == 0 ? 0 : leaf.order - a;
  case LeafKind::Semidirect32: {
    // (x,y) + (-x, -5^{-x} y) = (0, 5^{-x} y - 5^{-x} y)
    const auto x = a >> 3, y = a & 7u;
    const auto nx = (4u - x) & 3u;
    const auto ny = (8u - (pow5_mod8(nx) * y) % 8u) & 7u;
    return (nx << 3) | ny;
  }
  case LeafKind::Table:
    return (*leaf.inverse)[a];
  }
  return 0;
}

void FiniteGroup::check(Element a) const
{
  if (!contains(a))
    throw Error(Errc::ElementOutOfRange,
                "index " + std::to_string(a.index) + " not in group of order " +
                    std::to_string(order_));
}

Element FiniteGroup::op(Element a, Element b) const
{
  check(a);
  check(b);
  if (leaves_.size() == 1)
    return Element{leaf_op(leaves_.front(), a.index, b.index)};
  std::uint32_t ra = a.index, rb = b.index;
  std::uint32_t out = 0, scale = 1;
  for (auto it = leaves_.rbegin(); it != leaves_.rend(); ++it) {
    const auto la = ra % it->order, lb = rb % it->order;
    ra /= it->order;
    rb /= it->order;
    out += leaf_op(*it, la, lb) * scale;
    scale *= it->order;
  }
  return Element{out};
}

Element FiniteGroup::neg(Element a) const
{
  check(a);
  return Element{neg_[a.index]};
}

Element FiniteGroup::difference(Element a, Element b, DiffConvention conv) const
{
  return conv == DiffConvention::RightInverse ? op(a, neg(b)) : op(neg(b), a);
}

std::size_t FiniteGroup::coord_count() const noexcept
{
  std::size_t n = 0;
  for (const auto &leaf : leaves_)
    n += leaf.kind == LeafKind::Semidirect32 ? 2 : 1;
  return n;
}

std::vector<std::uint32_t> FiniteGroup::coords(Element a) const
{
  check(a);
  std::vector<std::uint32_t> out;
  out.reserve(coord_count());
  std::vector<std::uint32_t> locals(leaves_.size());
  std::uint32_t rest = a.index;
  for (std::size_t i = leaves_.size(); i-- > 0;) {
    locals[i] = rest % leaves_[i].order;
    rest /= leaves_[i].order;
  }
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (leaves_[i].kind == LeafKind::Semidirect32) {
      out.push_back(locals[i] >> 3);
      out.push_back(locals[i] & 7u);
    } else {
      out.push_back(locals[i]);
    }
  }
  return out;
}

Element FiniteGroup::from_coords(std::span<const std::uint32_t> c) const
{
  if (c.size() != coord_count())
    throw Error(Errc::ElementOutOfRange,
                "expected " + std::to_string(coord_count()) + " coordinates, got " +
                    std::to_string(c.size()));
  std::uint32_t index = 0;
  std::size_t pos = 0;
  for (const auto &leaf : leaves_) {
    std::uint32_t local;
    if (leaf.kind == LeafKind::Semidirect32) {
      if (c[pos] >= 4 || c[pos + 1] >= 8)
        throw Error(Errc::ElementOutOfRange, "semidirect coordinate out of range");
      local = (c[pos] << 3) | c[pos + 1];
      pos += 2;
    } else {
      if (c[pos] >= leaf.order)
        throw Error(Errc::ElementOutOfRange,
                    "coordinate " + std::to_string(c[pos]) + " exceeds modulus " +
                        std::to_string(leaf.order));
      local = c[pos++];
    }
    index = index * leaf.order + local;
  }
  return Element{index};
}

std::size_t FiniteGroup::factor_count() const
{
  auto p = std::get_if<ProductDesc>(desc_.get());
  return p ? p->factors.size() : 1;
}

const FiniteGroup &FiniteGroup::factor(std::size_t i) const
{
  auto p = std::get_if<ProductDesc>(desc_.get());
  if (!p)
    return *this;
  return p->factors.at(i);
}

Element FiniteGroup::join(std::span<const Element> parts) const
{
  if (parts.size() != factor_count())
    throw Error(Errc::ElementOutOfRange, "wrong number of factor components");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto &f = factor(i);
    f.check(parts[i]);
    index = index * f.order() + parts[i].index;
  }
  return Element{index};
}

std::vector<Element> FiniteGroup::split(Element a) const
{
  check(a);
  const auto n = factor_count();
  std::vector<Element> out(n);
  std::uint32_t rest = a.index;
  for (std::size_t i = n; i-- > 0;) {
    const auto ord = factor(i).order();
    out[i] = Element{rest % ord};
    rest /= ord;
  }
  return out;
}

std::vector<Element> FiniteGroup::subgroup_elements(std::span<const Element> generators) const
{
  std::vector<bool> in(order_, false);
  std::vector<Element> found{identity_};
  in[identity_.index] = true;
  for (auto g : generators)
    check(g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto g : generators) {
      auto c = op(found[i], g);
      if (!in[c.index]) {
        in[c.index] = true;
        found.push_back(c);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool FiniteGroup::is_subgroup(std::span<const Element> elems) const
{
  if (elems.empty())
    return false;
  std::vector<bool> in(order_, false);
  for (auto e : elems) {
    if (!contains(e))
      return false;
    in[e.index] = true;
  }
  if (!in[identity_.index])
    return false;
  for (auto a : elems)
    for (auto b : elems)
      if (!in[difference(a, b).index])
        return false;
  return true;
}

std::vector<Element> FiniteGroup::elements() const
{
  std::vector<Element> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i)
    out[i] = Element{i};
  return out;
}

std::string FiniteGroup::name() const
{
  return std::visit(
      [](const auto &d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CyclicDesc>)
          return "Z" + std::to_string(d.n);
        else if constexpr (std::is_same_v<T, Semidirect32Desc>)
          return "Z4:Z8";
        else if constexpr (std::is_same_v<T, TableDesc>)
          return "T" + std::to_string(d.n);
        else {
          std::string s;
          for (std::size_t i = 0; i < d.factors.size(); ++i) {
            if (i)
              s += "x";
            const bool nested = std::holds_alternative<ProductDesc>(d.factors[i].descriptor());
            s += nested ? "(" + d.factors[i].name() + ")" : d.factors[i].name();
          }
          return s;
        }
      },
      *desc_);
}

bool operator==(const FiniteGroup &a, const FiniteGroup &b)
{
  if (a.desc_ == b.desc_)
    return true;
  return a.order_ == b.order_ && descriptors_equal(*a.desc_, *b.desc_);
}

} // namespace hpdf
