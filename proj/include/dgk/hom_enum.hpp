#pragma once

#include <string>
#include <vector>

#include "dgk/delta.hpp"
#include "dgk/finite_ring.hpp"
#include "dgk/presented_ring.hpp"

namespace dgk {

struct EnumOptions {
  unsigned long long budget = 10000000ULL;  // candidate tuples / search nodes
  int jobs = 1;
};

/// All unital-hom generator assignments p -> r by exhaustive tuple search,
/// in lexicographic tuple order.  One slot per generator, except that the
/// formal inverse of an invertible pair is forced to the ring inverse of its
/// partner (which ranges over units only).  Throws BudgetError when the
/// tuple count exceeds the budget.  Workers (jobs > 1) shard the tuple
/// space in contiguous blocks; output order is independent of job count.
std::vector<std::vector<int>> enumerate_ring_homs(const PresentedRing& p, const FiniteRing& r,
                                                  const EnumOptions& opts = {});

/// Same answer set as enumerate_ring_homs, found by relation-driven
/// backtracking (unique-completion propagation).  Handles presentations
/// whose raw tuple space is far beyond the brute-force budget, as long as
/// the relations pin most generators.
std::vector<std::vector<int>> enumerate_ring_homs_by_propagation(const PresentedRing& p,
                                                                 const FiniteRing& r,
                                                                 const EnumOptions& opts = {});

long long count_ring_homs(const PresentedRing& p, const FiniteRing& r,
                          const EnumOptions& opts = {});

struct SignatureRow {
  std::string ring;
  long long count;
  friend bool operator==(const SignatureRow&, const SignatureRow&) = default;
};

/// Hom-count signature of p into a ring corpus; an isomorphism invariant.
std::vector<SignatureRow> hom_signature(const PresentedRing& p,
                                        const std::vector<FiniteRing>& corpus,
                                        const EnumOptions& opts = {});

/// All Delta-groupoid morphisms d -> ring_unit_delta(r), as assignments
/// element -> ring element (every image a unit, units of the groupoid to 1,
/// multiplicative on composables, and s(k(x)) = 1 - s(x) on h).
std::vector<std::vector<int>> enumerate_unit_morphisms(const DeltaGroupoid& d,
                                                       const FiniteRing& r,
                                                       const EnumOptions& opts = {});

/// The finite shadow of the universal property: the Delta-morphisms
/// d -> ring_unit_delta(r) and the ring homs universal_ring(d) -> r are
/// enumerated independently and must coincide generator-by-generator.
bool universal_property_check(const DeltaGroupoid& d, const FiniteRing& r,
                              const EnumOptions& opts = {});

}  // namespace dgk
