#pragma once

#include "hpdf/group.hpp"
#include "hpdf/multiset.hpp"
#include "hpdf/ring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hpdf {

/// A constructed family together with its verification report and the
/// parameters the construction predicts.
struct Construction {
  DesignFamily family;
  VerificationReport report;
  FamilyKind expected_kind;
  std::string expected_parameters;

  /// The report reproduces the predicted kind and parameter tuple. A
  /// partitioned family also counts as a certified DF.
  bool certified() const;
};

/// {D, G \ D} for a (v,k,lambda) difference set D; a (v,[k,v-k],v-2k+2lambda)-PDF.
/// Throws NotADifferenceSet.
Construction complement_pdf(const FiniteGroup &g, const Multiset &d,
                            DiffConvention conv = DiffConvention::RightInverse);

/// {^2 X : X in pdf} for a Hadamard PDF; a (G,2K,4lambda)-SDF. Throws NotHadamard.
Construction double_sdf(const DesignFamily &pdf,
                        DiffConvention conv = DiffConvention::RightInverse);

/// ^2(Z_q \ D) with D the nonzero squares mod q, q prime and 3 mod 4.
/// Throws NotPrime or BadResidueClass.
Construction paley_double_sdf(std::uint32_t q);

/// Value table of an endomorphism of (H, +), indexed by element index.
using Endomorphism = std::vector<Element>;

/// For blocks of G x H, the H-components of their differences grouped by the
/// G-component: result[g] is the list L_g.
std::vector<std::vector<Element>> lifted_difference_lists(
    const FiniteGroup &g_times_h, const std::vector<Multiset> &lifts,
    DiffConvention conv = DiffConvention::RightInverse);

/// Lifts an SDF in G to a DF in G x H relative to G x {0}: each lift B_i
/// projects onto X_i, and the endomorphisms E must satisfy
/// sum over e in E of e(L_g) = lambda (H \ {0}) for every g. Output blocks
/// are ordered by (block, endomorphism).
///
/// Throws ProjectionMismatch, ParameterMismatch (mu |E| != lambda (|H|-1)),
/// NotAnEndomorphism, or ConditionFails naming the first bad g.
Construction fundamental_construction(const DesignFamily &sdf, const FiniteGroup &h,
                                      const std::vector<Multiset> &lifts,
                                      const std::vector<Endomorphism> &endos,
                                      std::uint64_t lambda,
                                      DiffConvention conv = DiffConvention::RightInverse);

enum class Completion { SingleBlock, PerBlock };

const char *completion_name(Completion c);

/// Inputs of the expansion of a Hadamard PDF by an odd-order ring.
struct ExpansionRecipe {
  DesignFamily pdf;
  Ring ring;
  std::vector<RingElement> y;
  /// f(d) for every element d of G, by element index.
  std::vector<RingElement> f_map;
  std::vector<RingElement> starters;
  Completion completion = Completion::SingleBlock;
  DiffConvention convention = DiffConvention::RightInverse;
};

/// Throws RecipeInvariantViolated naming the first broken invariant.
void validate(const ExpansionRecipe &recipe);

/// Y from build_y_powers(ring, K_max); f sends the j-th element of each block
/// to Y[j]. Throws NotHadamard, EvenOrder or NoValidY.
ExpansionRecipe make_recipe(const DesignFamily &pdf, const Ring &ring,
                            Completion completion = Completion::SingleBlock,
                            DiffConvention conv = DiffConvention::RightInverse);

/// Same, with a caller-chosen Y.
ExpansionRecipe make_recipe(const DesignFamily &pdf, const Ring &ring,
                            std::vector<RingElement> y,
                            Completion completion = Completion::SingleBlock,
                            DiffConvention conv = DiffConvention::RightInverse);

/// Facts about the lifted blocks B_i checked before the starter step.
struct ExpansionChecks {
  std::size_t list_size;      // common |L_g|
  bool sizes_uniform;         // every |L_g| = 4 lambda
  bool negation_closed;       // h and -h equally often in every L_g
  bool units_only;            // every entry of every L_g is a unit
  bool block_cover;           // union over s of e_s(B_i) = D_i x (H \ {0})
};

/// The relative PDF in G x H before completion, plus the intermediate checks.
/// Throws ConditionFails when any intermediate check fails.
Construction relative_expansion(const ExpansionRecipe &recipe, ExpansionChecks *checks = nullptr);

/// The relative family completed on G x {0}. SingleBlock appends G x {0} and
/// gives a (2 lambda |H|, ^n(2K) + {2 lambda}, 2 lambda)-PDF. PerBlock appends
/// {D_i x {0}}, predicted as (2 lambda |H|, ^n(2K) + K, 2 lambda); those
/// blocks only cover (G \ {0}) x {0} lambda times, so that variant comes back
/// uncertified.
Construction hadamard_expansion(const ExpansionRecipe &recipe, ExpansionChecks *checks = nullptr);

struct ExpansionPair {
  Construction single_block;
  Construction per_block;
};

/// Expansion of {D, G \ D} for a (4u^2, 2u^2-u, u^2-u) difference set D over
/// the product of fields of order m. Throws DivisorTooSmall when some maximal
/// prime power divisor of m is at most 4u^2 + 2u.
ExpansionPair corollary_hds_expansion(unsigned u, const FiniteGroup &g, const Multiset &hds,
                                      std::uint32_t m);

/// As above, taking the first difference set found by search_hds.
/// Throws NoHdsAvailable.
ExpansionPair corollary_hds_expansion(unsigned u, const FiniteGroup &g, std::uint32_t m);

/// Expansion of the order-32 catalog PDF over the product of fields of
/// order m. Throws DivisorTooSmall unless every divisor exceeds 44.
ExpansionPair corollary_sporadic_expansion(std::uint32_t m);

/// First maximal prime power divisor of m (increasing prime) not exceeding
/// bound, or 0 when all exceed it.
std::uint32_t first_small_divisor(std::uint32_t m, std::uint32_t bound);

} // namespace hpdf
