#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dgk/common.hpp"

namespace dgk {

/// Finite unital ring given by full addition and multiplication tables.
struct FiniteRing {
  std::string name;  // CLI literal when built from one, else descriptive
  std::vector<std::string> names;
  std::vector<std::vector<int>> add, mul;
  int zero = -1, one = -1;

  int size() const { return static_cast<int>(names.size()); }
  int neg(int x) const;                   // additive inverse
  int sub(int x, int y) const { return add[x][neg(y)]; }
  int element_index(const std::string& id) const;
};

ValidationReport validate_ring(const FiniteRing& r);

FiniteRing zmod(int n);                                  // n >= 2
FiniteRing matrix_ring(const FiniteRing& r, int k);      // k x k matrices
FiniteRing product_ring(const FiniteRing& a, const FiniteRing& b);

struct UnitGroup {
  std::vector<int> units;       // sorted element indices
  std::vector<int> inverse_of;  // ring-element-indexed; -1 for non-units

  bool is_unit(int x) const { return inverse_of[x] >= 0; }
  int size() const { return static_cast<int>(units.size()); }
};

/// Exact unit set with inverse table, by enumeration.
UnitGroup units(const FiniteRing& r);

/// Ring literals: "zmod:n", "mat:k:<ring>", "prod:<ring>,<ring>".
FiniteRing parse_ring_spec(const std::string& spec);

/// The fixed target corpus used by the hom-count oracle:
/// zmod 2..7, mat:2:zmod:2, prod:zmod:2,zmod:3.
std::vector<FiniteRing> default_ring_corpus();

}  // namespace dgk
