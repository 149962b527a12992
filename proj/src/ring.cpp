#include "hpdf/ring.hpp"

#include "hpdf/error.hpp"

#include <algorithm>
#include <numeric>

namespace hpdf {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<PrimePower> maximal_prime_powers(std::uint32_t m)
{
  std::vector<PrimePower> out;
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= m; ++p) {
    if (m % p)
      continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      ++pp.e;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (m > 1)
    out.push_back(PrimePower{m, 1, m});
  return out;
}

namespace {

using Poly = std::vector<std::uint32_t>; // low to high

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t n)
{
  std::uint64_t r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1)
      r = r * b % n;
    b = b * b % n;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> prime_divisors(std::uint32_t n)
{
  std::vector<std::uint32_t> out;
  for (const auto &pp : maximal_prime_powers(n))
    out.push_back(pp.p);
  return out;
}

Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t k)
{
  Poly d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly &d, std::uint32_t p)
{
  std::uint32_t index = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    index = index * p + d[i];
  return index;
}

// Remainder of f by a monic g, coefficients mod p.
Poly poly_rem(Poly f, const Poly &g, std::uint32_t p)
{
  const auto dg = g.size() - 1;
  for (std::size_t d = f.size(); d-- > dg;) {
    const std::uint64_t c = f[d];
    if (!c)
      continue;
    for (std::size_t i = 0; i <= dg; ++i)
      f[d - dg + i] = static_cast<std::uint32_t>((f[d - dg + i] + (p - c) * g[i]) % p);
  }
  f.resize(dg);
  return f;
}

bool is_irreducible(const Poly &f, std::uint32_t p)
{
  const auto k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      auto r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](auto c) { return c == 0; }))
        return false;
    }
  }
  return true;
}

std::uint32_t gf_raw_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                         const Poly &modulus)
{
  const auto da = digits(a, p, k), db = digits(b, p, k);
  Poly prod(2 * k - 1, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
  return undigits(poly_rem(std::move(prod), modulus, p), p);
}

} // namespace

Ring::Leaf Ring::make_zmod_leaf(std::uint32_t n)
{
  if (n == 0)
    throw Error(Errc::BadDescriptor, "Z_0 is not finite");
  Leaf l{false, n, 1, n, is_prime(n), {}, nullptr, nullptr, 0};
  if (l.field) {
    const auto divs = prime_divisors(n - 1);
    for (std::uint32_t g = 1; g < n; ++g) {
      if (std::all_of(divs.begin(), divs.end(),
                      [&](auto q) { return pow_mod(g, (n - 1) / q, n) != 1; })) {
        l.primitive = g;
        break;
      }
    }
  }
  return l;
}

Ring::Leaf Ring::make_gf_leaf(std::uint32_t p, std::uint32_t k, Poly modulus_low)
{
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20))
      throw Error(Errc::BadDescriptor, "field order too large");
  }
  Leaf l{true, p, k, static_cast<std::uint32_t>(q), true, std::move(modulus_low), nullptr, nullptr, 0};

  const auto order = l.order;
  const auto divs = prime_divisors(order - 1);
  auto raw_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1 % order;
    while (e) {
      if (e & 1)
        r = gf_raw_mul(r, a, p, k, l.modulus_low);
      a = gf_raw_mul(a, a, p, k, l.modulus_low);
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t g = 1; g < order; ++g) {
    if (std::all_of(divs.begin(), divs.end(),
                    [&](auto d) { return raw_pow(g, (order - 1) / d) != 1; })) {
      l.primitive = g;
      break;
    }
  }

  std::vector<std::uint32_t> exp(order - 1), log(order, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < order; ++i) {
    exp[i] = x;
    log[x] = i;
    x = gf_raw_mul(x, l.primitive, p, k, l.modulus_low);
  }
  l.exp = std::make_shared<const std::vector<std::uint32_t>>(std::move(exp));
  l.log = std::make_shared<const std::vector<std::uint32_t>>(std::move(log));
  return l;
}

Ring Ring::zmod(std::uint32_t n)
{
  Ring r;
  r.leaves_.push_back(make_zmod_leaf(n));
  r.desc_ = std::make_shared<const RingDescriptor>(ZmodDesc{n});
  r.finish();
  return r;
}

Ring Ring::gf(std::uint32_t p, std::uint32_t k)
{
  if (!is_prime(p))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0)
    throw Error(Errc::BadDescriptor, "GF degree must be positive");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > (1u << 20))
      throw Error(Errc::BadDescriptor, "field order too large");
  }
  // Enumerate the lower coefficients as a base-p number, x^(k-1) most
  // significant; the first irreducible hit is the lexicographic minimum.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = digits(static_cast<std::uint32_t>(idx), p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      Poly high(f.rbegin(), f.rend());
      return gf(p, k, std::move(high));
    }
  }
  throw Error(Errc::BadDescriptor, "no irreducible polynomial found");
}

Ring Ring::gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
{
  if (!is_prime(p))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0 || modulus.size() != k + 1 || modulus.front() != 1)
    throw Error(Errc::BadDescriptor, "modulus must be monic of degree k");
  for (auto c : modulus)
    if (c >= p)
      throw Error(Errc::BadDescriptor, "modulus coefficient not reduced mod p");
  Poly low(modulus.rbegin(), modulus.rend());
  if (!is_irreducible(low, p))
    throw Error(Errc::BadDescriptor, "modulus is reducible over Z_" + std::to_string(p));
  Ring r;
  r.leaves_.push_back(make_gf_leaf(p, k, std::move(low)));
  r.desc_ = std::make_shared<const RingDescriptor>(GfDesc{p, k, std::move(modulus)});
  r.finish();
  return r;
}

Ring Ring::product(std::vector<Ring> factors)
{
  if (factors.empty())
    throw Error(Errc::BadDescriptor, "ring product with no factors");
  Ring r;
  std::uint64_t order = 1;
  for (const auto &f : factors) {
    order *= f.order();
    if (order > (1u << 24))
      throw Error(Errc::BadDescriptor, "ring order too large");
    r.leaves_.insert(r.leaves_.end(), f.leaves_.begin(), f.leaves_.end());
  }
  r.desc_ = std::make_shared<const RingDescriptor>(RingProductDesc{std::move(factors)});
  r.finish();
  return r;
}

Ring Ring::fields_of_order(std::uint32_t m)
{
  if (m < 2)
    throw Error(Errc::BadDescriptor, "ring order must be at least 2");
  std::vector<Ring> fields;
  for (const auto &pp : maximal_prime_powers(m))
    fields.push_back(gf(pp.p, pp.e));
  if (fields.size() == 1)
    return fields.front();
  return product(std::move(fields));
}

Ring Ring::make(RingDescriptor desc)
{
  return std::visit(
      [](auto &&d) -> Ring {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZmodDesc>)
          return zmod(d.n);
        else if constexpr (std::is_same_v<T, GfDesc>)
          return d.modulus.empty() ? gf(d.p, d.k) : gf(d.p, d.k, std::move(d.modulus));
        else
          return product(std::move(d.factors));
      },
      std::move(desc));
}

void Ring::finish()
{
  std::uint32_t order = 1, one = 0;
  for (const auto &l : leaves_) {
    order *= l.order;
    one = one * l.order + (1 % l.order);
  }
  order_ = order;
  one_ = RingElement{one};
}

std::string Ring::name() const
{
  return std::visit(
      [](const auto &d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZmodDesc>)
          return "Z" + std::to_string(d.n);
        else if constexpr (std::is_same_v<T, GfDesc>)
          return d.k == 1 ? "F" + std::to_string(d.p)
                          : "GF(" + std::to_string(d.p) + "^" + std::to_string(d.k) + ")";
        else {
          std::string s;
          for (std::size_t i = 0; i < d.factors.size(); ++i) {
            if (i)
              s += "x";
            const bool nested =
                std::holds_alternative<RingProductDesc>(d.factors[i].descriptor());
            s += nested ? "(" + d.factors[i].name() + ")" : d.factors[i].name();
          }
          return s;
        }
      },
      *desc_);
}

void Ring::check(RingElement a) const
{
  if (!contains(a))
    throw Error(Errc::ElementOutOfRange, "ring index " + std::to_string(a.index) +
                                             " not in ring of order " + std::to_string(order_));
}

std::uint32_t Ring::leaf_add(const Leaf &l, std::uint32_t a, std::uint32_t b)
{
  if (!l.gf || l.k == 1) {
    auto s = a + b;
    return s >= l.order ? s - l.order : s;
  }
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < l.k; ++i) {
    out += ((a % l.p + b % l.p) % l.p) * scale;
    a /= l.p;
    b /= l.p;
    scale *= l.p;
  }
  return out;
}

std::uint32_t Ring::leaf_neg(const Leaf &l, std::uint32_t a)
{
  if (!l.gf || l.k == 1)
    return a == 0 ? 0 : l.order - a;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < l.k; ++i) {
    out += ((l.p - a % l.p) % l.p) * scale;
    a /= l.p;
    scale *= l.p;
  }
  return out;
}

std::uint32_t Ring::leaf_mul(const Leaf &l, std::uint32_t a, std::uint32_t b)
{
  if (!l.gf)
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % l.order);
  if (a == 0 || b == 0)
    return 0;
  const auto &log = *l.log;
  return (*l.exp)[(std::uint64_t{log[a]} + log[b]) % (l.order - 1)];
}

bool Ring::leaf_unit(const Leaf &l, std::uint32_t a)
{
  if (l.gf)
    return a != 0;
  return std::gcd(a, l.order) == 1;
}

template <class F> RingElement Ring::zip(RingElement a, RingElement b, F &&f) const
{
  check(a);
  check(b);
  if (leaves_.size() == 1)
    return RingElement{f(leaves_.front(), a.index, b.index)};
  std::uint32_t ra = a.index, rb = b.index, out = 0, scale = 1;
  for (auto it = leaves_.rbegin(); it != leaves_.rend(); ++it) {
    out += f(*it, ra % it->order, rb % it->order) * scale;
    ra /= it->order;
    rb /= it->order;
    scale *= it->order;
  }
  return RingElement{out};
}

RingElement Ring::add(RingElement a, RingElement b) const { return zip(a, b, leaf_add); }

RingElement Ring::neg(RingElement a) const
{
  return zip(a, a, [](const Leaf &l, std::uint32_t x, std::uint32_t) { return leaf_neg(l, x); });
}

RingElement Ring::sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

RingElement Ring::mul(RingElement a, RingElement b) const { return zip(a, b, leaf_mul); }

RingElement Ring::pow(RingElement a, std::uint64_t e) const
{
  RingElement r = one_;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Ring::is_unit(RingElement a) const
{
  check(a);
  std::uint32_t rest = a.index;
  for (auto it = leaves_.rbegin(); it != leaves_.rend(); ++it) {
    if (!leaf_unit(*it, rest % it->order))
      return false;
    rest /= it->order;
  }
  return true;
}

bool Ring::is_field() const { return leaves_.size() == 1 && leaves_.front().field; }

bool Ring::is_product_of_fields() const
{
  return std::all_of(leaves_.begin(), leaves_.end(), [](const Leaf &l) { return l.field; });
}

RingElement Ring::primitive_element() const
{
  if (!is_field())
    throw Error(Errc::NotAField, name() + " is not a field");
  return RingElement{leaves_.front().primitive};
}

std::vector<std::uint32_t> Ring::coords(RingElement a) const
{
  check(a);
  std::vector<std::uint32_t> locals(leaves_.size());
  std::uint32_t rest = a.index;
  for (std::size_t i = leaves_.size(); i-- > 0;) {
    locals[i] = rest % leaves_[i].order;
    rest /= leaves_[i].order;
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    const auto &l = leaves_[i];
    if (l.gf && l.k > 1) {
      auto d = digits(locals[i], l.p, l.k);
      out.insert(out.end(), d.rbegin(), d.rend());
    } else {
      out.push_back(locals[i]);
    }
  }
  return out;
}

RingElement Ring::from_coords(std::span<const std::uint32_t> c) const
{
  std::size_t need = 0;
  for (const auto &l : leaves_)
    need += (l.gf && l.k > 1) ? l.k : 1;
  if (c.size() != need)
    throw Error(Errc::ElementOutOfRange, "expected " + std::to_string(need) +
                                             " ring coordinates, got " + std::to_string(c.size()));
  std::uint32_t index = 0;
  std::size_t pos = 0;
  for (const auto &l : leaves_) {
    const auto width = (l.gf && l.k > 1) ? l.k : 1u;
    const auto radix = (l.gf && l.k > 1) ? l.p : l.order;
    std::uint32_t local = 0;
    for (std::uint32_t i = 0; i < width; ++i) {
      if (c[pos] >= radix)
        throw Error(Errc::ElementOutOfRange, "ring coordinate out of range");
      local = local * radix + c[pos++];
    }
    index = index * l.order + local;
  }
  return RingElement{index};
}

std::size_t Ring::factor_count() const
{
  auto p = std::get_if<RingProductDesc>(desc_.get());
  return p ? p->factors.size() : 1;
}

const Ring &Ring::factor(std::size_t i) const
{
  auto p = std::get_if<RingProductDesc>(desc_.get());
  if (!p)
    return *this;
  return p->factors.at(i);
}

RingElement Ring::join(std::span<const RingElement> parts) const
{
  if (parts.size() != factor_count())
    throw Error(Errc::ElementOutOfRange, "wrong number of ring factor components");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    factor(i).check(parts[i]);
    index = index * factor(i).order() + parts[i].index;
  }
  return RingElement{index};
}

std::vector<RingElement> Ring::split(RingElement a) const
{
  check(a);
  std::vector<RingElement> out(factor_count());
  std::uint32_t rest = a.index;
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = RingElement{rest % factor(i).order()};
    rest /= factor(i).order();
  }
  return out;
}

FiniteGroup Ring::additive_group() const
{
  return std::visit(
      [](const auto &d) -> FiniteGroup {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZmodDesc>)
          return FiniteGroup::cyclic(d.n);
        else if constexpr (std::is_same_v<T, GfDesc>) {
          if (d.k == 1)
            return FiniteGroup::cyclic(d.p);
          return FiniteGroup::product(std::vector<FiniteGroup>(d.k, FiniteGroup::cyclic(d.p)));
        } else {
          std::vector<FiniteGroup> groups;
          for (const auto &f : d.factors)
            groups.push_back(f.additive_group());
          return FiniteGroup::product(std::move(groups));
        }
      },
      *desc_);
}

std::vector<Element> Ring::multiplication_table(RingElement s) const
{
  std::vector<Element> out(order_);
  for (std::uint32_t h = 0; h < order_; ++h)
    out[h] = Element{mul(s, RingElement{h}).index};
  return out;
}

std::vector<RingElement> Ring::elements() const
{
  std::vector<RingElement> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i)
    out[i] = RingElement{i};
  return out;
}

std::vector<RingElement> starter_reps(const Ring &r)
{
  if (r.order() % 2 == 0)
    throw Error(Errc::EvenOrder, r.name() + " has even order " + std::to_string(r.order()));
  std::vector<RingElement> reps;
  reps.reserve((r.order() - 1) / 2);
  for (std::uint32_t h = 1; h < r.order(); ++h)
    if (h < r.neg(RingElement{h}).index)
      reps.push_back(RingElement{h});
  return reps;
}

namespace {

RingElement diagonal_primitive(const Ring &r)
{
  if (r.is_field())
    return r.primitive_element();
  if (r.factor_count() == 1)
    throw Error(Errc::NotAField, r.name() + " is not a field");
  std::vector<RingElement> parts;
  for (std::size_t i = 0; i < r.factor_count(); ++i)
    parts.push_back(diagonal_primitive(r.factor(i)));
  return r.join(parts);
}

} // namespace

std::vector<RingElement> build_y_powers(const Ring &r, std::size_t m)
{
  const auto rho = diagonal_primitive(r);
  std::vector<RingElement> y;
  y.reserve(m);
  auto x = rho;
  for (std::size_t j = 1; j <= m; ++j) {
    y.push_back(x);
    x = r.mul(x, rho);
  }
  return y;
}

YCheck check_y_condition(const Ring &r, std::span<const RingElement> y)
{
  YCheck out;
  if (y.empty())
    return out;
  for (auto e : y)
    if (!r.is_unit(e)) {
      out.witness = std::pair{e, e};
      return out;
    }
  std::vector<RingElement> both(y.begin(), y.end());
  for (auto e : y)
    both.push_back(r.neg(e));
  for (std::size_t i = 0; i < both.size(); ++i)
    for (std::size_t j = i + 1; j < both.size(); ++j)
      if (!r.is_unit(r.sub(both[i], both[j]))) {
        out.witness = std::pair{both[i], both[j]};
        return out;
      }
  out.ok = true;
  return out;
}

} // namespace hpdf
