#pragma once

#include "hpdf/group.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hpdf {

/// Element of a Ring by canonical index. The index coincides with the index of
/// the same element in Ring::additive_group().
struct RingElement {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(RingElement, RingElement) = default;
};

class Ring;

struct ZmodDesc {
  std::uint32_t n;
};

/// GF(p^k) = Z_p[x] / (modulus). Modulus coefficients run from x^k down to
/// the constant term and the leading one is 1.
struct GfDesc {
  std::uint32_t p;
  std::uint32_t k;
  std::vector<std::uint32_t> modulus;
};

struct RingProductDesc {
  std::vector<Ring> factors;
};

using RingDescriptor = std::variant<ZmodDesc, GfDesc, RingProductDesc>;

/// Finite commutative ring with identity: Z_n, GF(p^k), or a direct product.
///
/// GF coordinates are polynomial coefficients from x^(k-1) down to x^0, so an
/// element's index is its coefficient vector read as a base-p number.
class Ring {
public:
  static Ring zmod(std::uint32_t n);
  /// Uses the lexicographically smallest monic irreducible of degree k.
  /// Throws NotPrime.
  static Ring gf(std::uint32_t p, std::uint32_t k);
  /// Throws NotPrime, or BadDescriptor when the modulus is not monic
  /// irreducible of degree k.
  static Ring gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);
  static Ring product(std::vector<Ring> factors);
  /// Product of GF(q) over the maximal prime power divisors q of m, in
  /// increasing prime order. A single divisor gives the field itself.
  static Ring fields_of_order(std::uint32_t m);
  static Ring make(RingDescriptor desc);

  std::uint32_t order() const noexcept { return order_; }
  const RingDescriptor &descriptor() const noexcept { return *desc_; }
  std::string name() const;

  RingElement zero() const noexcept { return RingElement{0}; }
  RingElement one() const noexcept { return one_; }
  bool contains(RingElement a) const noexcept { return a.index < order_; }
  void check(RingElement a) const;

  RingElement add(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement sub(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement pow(RingElement a, std::uint64_t e) const;
  bool is_unit(RingElement a) const;

  /// A single field leaf: GF(p^k), or Z_p with p prime.
  bool is_field() const;
  /// Every leaf is a field.
  bool is_product_of_fields() const;
  /// Smallest element of multiplicative order |F| - 1. Throws NotAField.
  RingElement primitive_element() const;

  std::vector<std::uint32_t> coords(RingElement a) const;
  RingElement from_coords(std::span<const std::uint32_t> coords) const;

  std::size_t factor_count() const;
  const Ring &factor(std::size_t i) const;
  RingElement join(std::span<const RingElement> parts) const;
  std::vector<RingElement> split(RingElement a) const;

  /// (R, +) as a FiniteGroup with matching element indices.
  FiniteGroup additive_group() const;

  /// The group endomorphism h -> s * h of (R, +), as a value table.
  std::vector<Element> multiplication_table(RingElement s) const;

  std::vector<RingElement> elements() const;

private:
  struct Leaf {
    bool gf;
    std::uint32_t p;     // characteristic for GF, modulus n for Z_n
    std::uint32_t k;     // 1 for Z_n
    std::uint32_t order;
    bool field;
    std::vector<std::uint32_t> modulus_low; // GF only, low to high, monic
    std::shared_ptr<const std::vector<std::uint32_t>> exp; // GF only
    std::shared_ptr<const std::vector<std::uint32_t>> log; // GF only
    std::uint32_t primitive = 0;                            // fields only
  };

  Ring() = default;
  void finish();

  static Leaf make_zmod_leaf(std::uint32_t n);
  static Leaf make_gf_leaf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus_low);
  static std::uint32_t leaf_add(const Leaf &l, std::uint32_t a, std::uint32_t b);
  static std::uint32_t leaf_neg(const Leaf &l, std::uint32_t a);
  static std::uint32_t leaf_mul(const Leaf &l, std::uint32_t a, std::uint32_t b);
  static bool leaf_unit(const Leaf &l, std::uint32_t a);

  template <class F> RingElement zip(RingElement a, RingElement b, F &&f) const;

  std::shared_ptr<const RingDescriptor> desc_;
  std::vector<Leaf> leaves_;
  std::uint32_t order_ = 1;
  RingElement one_{};
};

struct PrimePower {
  std::uint32_t p;
  std::uint32_t e;
  std::uint32_t q;
};

bool is_prime(std::uint64_t n);
/// Maximal prime power divisors of m by trial division, increasing p.
std::vector<PrimePower> maximal_prime_powers(std::uint32_t m);

/// Representatives of the pairs {h, -h} of nonzero elements: the smaller index
/// of each pair, in increasing order. Throws EvenOrder.
std::vector<RingElement> starter_reps(const Ring &r);

/// Y_j = (rho_1^j, ..., rho_t^j) for j = 1..m, rho_i the primitive element of
/// the i-th field factor. Throws NotAField.
std::vector<RingElement> build_y_powers(const Ring &r, std::size_t m);

struct YCheck {
  bool ok = false;
  /// Offending pair from Y u -Y; a non-unit member of Y is reported with
  /// itself as the second entry.
  std::optional<std::pair<RingElement, RingElement>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Every element of Y is a unit and every difference of two distinct
/// positions of the list Y u -Y is a unit. The second clause forces Y and -Y
/// to be disjoint with 2|Y| distinct elements.
YCheck check_y_condition(const Ring &r, std::span<const RingElement> y);

} // namespace hpdf
