#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dgk/groupoid.hpp"

namespace dgk {

/// A groupoid G with a subset H closed under inversion and an involution k
/// on H satisfying  k(xy) ik(y) = k(k(x) iki(y))  for every H-composable
/// pair (x, y).  k is an explicit table: k[e] >= 0 exactly for e in H.
struct DeltaGroupoid {
  Groupoid g;
  std::vector<int> h;  // sorted element indices
  std::vector<int> k;  // element-indexed; -1 outside h

  bool in_h(int e) const { return k.size() > static_cast<size_t>(e) && k[e] >= 0; }
  int h_size() const { return static_cast<int>(h.size()); }

  friend bool operator==(const DeltaGroupoid&, const DeltaGroupoid&) = default;
};

/// Builds the k table from explicit pairs; requires every pair to stay
/// inside h (structural problems beyond that are validate_delta's job).
DeltaGroupoid make_delta(Groupoid g, std::vector<int> h,
                         const std::vector<std::pair<int, int>>& k_pairs);

DeltaGroupoid trivial_delta(const Groupoid& g);

/// Enumerates every H-composable pair; reports, separately, failures of
/// H-composability of the two derived pairs and of the defining identity.
/// k not being an involutive self-map of h is a structural error and stops
/// axiom checking.
ValidationReport validate_delta(const DeltaGroupoid& d);

/// The derived identity iki = kik, checked pointwise on h.
bool check_iki_kik(const DeltaGroupoid& d);

struct DeltaMorphism {
  DeltaGroupoid domain, codomain;
  std::vector<int> object_map;
  std::vector<int> element_map;

  GroupoidMorphism underlying() const {
    return {domain.g, codomain.g, object_map, element_map};
  }
  friend bool operator==(const DeltaMorphism&, const DeltaMorphism&) = default;
};

bool is_delta_morphism(const DeltaMorphism& f);
ValidationReport validate_delta_morphism(const DeltaMorphism& f);
DeltaMorphism identity_delta_morphism(const DeltaGroupoid& d);
DeltaMorphism compose(const DeltaMorphism& f, const DeltaMorphism& g);

enum class IsoStatus { found, none, cap_exceeded };

struct IsoResult {
  IsoStatus status = IsoStatus::none;
  std::optional<DeltaMorphism> iso;
};

/// Exact backtracking search for a bijective Delta-morphism, pruned by
/// src/tgt degrees and h/k compatibility.  Groupoids larger than `cap`
/// elements give an explicit cap_exceeded outcome.
IsoResult find_isomorphism(const DeltaGroupoid& d1, const DeltaGroupoid& d2, int cap = 64);

}  // namespace dgk
