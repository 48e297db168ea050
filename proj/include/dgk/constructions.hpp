#pragma once

#include "dgk/delta.hpp"
#include "dgk/finite_ring.hpp"

namespace dgk {

/// The X^3 Delta-groupoid on n letters: elements (a,b,c), composition
/// (a,b,c)(a,c,g) = (a,b,g), h the triples with pairwise distinct entries,
/// k((a,b,c)) = (c,b,a).
DeltaGroupoid x3_delta(int n);

/// The unit group R* as a one-object groupoid, h = {x : 1-x invertible},
/// k(x) = 1 - x.
DeltaGroupoid ring_unit_delta(const FiniteRing& r);

/// The affine group R* x R with (x,y)(u,v) = (xu, xv+y); h = R* x R*,
/// k swaps the coordinates.
DeltaGroupoid affine_delta(const FiniteRing& r);

/// x |-> (x, 1-x), from ring_unit_delta(r) into affine_delta(r).
DeltaMorphism canonical_embedding(const FiniteRing& r);

/// A group G with subgroup G+, involution theta, G- = theta G+ theta, and
/// the multiplication map G+ x G- -> G+G- required to be injective.
struct FactorizedGroupData {
  Groupoid group;           // one-object groupoid
  std::vector<int> g_plus;  // element indices of the subgroup
  int theta = -1;
};

/// The Delta-group on G+ with h = G+ n G-G+theta n thetaG+G- and
/// k(x) = ((theta x^-1)_+)^-1 via the factorization map.  Rejects data
/// whose multiplication map is not injective or whose theta is not an
/// involution, citing a witness.
DeltaGroupoid factorized_delta(const FactorizedGroupData& fd);

}  // namespace dgk
