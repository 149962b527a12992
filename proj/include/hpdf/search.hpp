#pragma once

#include "hpdf/group.hpp"
#include "hpdf/multiset.hpp"
#include "hpdf/ring.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

namespace hpdf {

struct SearchBounds {
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  /// Zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  /// Zero means one worker per hardware thread.
  unsigned workers = 0;
};

struct HdsSearchResult {
  std::vector<Multiset> sets;
  std::vector<VerificationReport> reports; // one per set
  bool complete = true;                    // false when the time budget ran out
  std::uint64_t nodes = 0;
};

/// All (4u^2, 2u^2-u, u^2-u) difference sets of g, one per translation class:
/// each result contains the identity and is the lexicographically least of
/// its translates that do. Results are sorted and certified. Throws
/// OrderMismatch when |g| != 4u^2.
HdsSearchResult search_hds(const FiniteGroup &g, unsigned u, const SearchBounds &bounds = {},
                           DiffConvention conv = DiffConvention::RightInverse);

struct UnitYSearchResult {
  std::size_t max_size = 0;
  std::vector<RingElement> witness;
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Largest Y of units such that every difference of distinct elements of
/// Y u -Y is a unit.
///
/// Branch and bound over pairwise compatibility. Scaling Y by a unit and
/// flipping signs of its members both preserve the condition, so the search
/// fixes 1 in Y and draws the rest from the starter representatives. Throws
/// EvenOrder.
UnitYSearchResult max_unit_y_search(const Ring &r, const SearchBounds &bounds = {});

} // namespace hpdf
