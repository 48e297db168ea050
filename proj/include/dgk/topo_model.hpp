#pragma once

#include <utility>
#include <vector>

#include "dgk/delta.hpp"

namespace dgk {

/// Combinatorial model of a topological pair with marked endpoints:
/// p models the fundamental groupoid on the marked points, in_a flags the
/// subgroupoid of path classes staying in the subspace, in_l flags the long
/// arcs (lifted distinguished classes).
struct ToppModel {
  Groupoid p;
  std::vector<char> in_a;  // element-indexed
  std::vector<char> in_l;

  std::vector<int> a_elements() const;
  std::vector<int> long_arcs() const;
  friend bool operator==(const ToppModel&, const ToppModel&) = default;
};

/// a_sub must be a subgroupoid, long arcs disjoint from it and closed under
/// inversion, and a long arc is a loop exactly when it is self-inverse.
ValidationReport validate_topp_model(const ToppModel& m);

/// One detected short arc: x in a_sub with alpha x beta = y gamma z for
/// long arcs alpha, beta, gamma and y, z in a_sub.  The triple is unique
/// per arc (a model-validity condition); the (y, z) witnesses need not be.
struct ShortArc {
  int element = -1;
  int alpha = -1, beta = -1, gamma = -1;  // p0, p1, p2
  std::vector<std::pair<int, int>> solutions;
};

struct ShortArcTable {
  std::vector<ShortArc> arcs;
  ValidationReport issues;  // non-empty = model rejected

  bool ok() const { return issues.ok(); }
  int arc_pos(int element) const;
};

/// Exhaustive search over composable quintuples.  Rejects the model when
/// two solutions for one arc disagree on (alpha, beta, gamma).
ShortArcTable short_arcs(const ToppModel& m);

/// The finest equivalence on arcs such that all y-witnesses of one arc are
/// equivalent and likewise all z-witnesses; classes listed sorted.
std::vector<std::vector<int>> equivalence_closure(const ShortArcTable& t);

struct GOutput {
  bool accepted = false;
  ValidationReport issues;
  int rounds = 1;               // closure/quotient fixpoint rounds
  DeltaGroupoid delta;          // meaningful when accepted
  GroupoidMorphism projection;  // a_sub subgroupoid -> quotient
  std::vector<int> h_classes;   // quotient elements carrying short arcs
  std::string report_text() const;
};

/// The functor to Delta-groupoids: quotient of the a-subgroupoid by the
/// congruence generated by the arc partition, with k([x]) = [z].  Every
/// structural claim along the way (k well-defined, involutive, the
/// inversion identities, the defining identity of the result) is checked
/// per instance; any failure rejects the model with a report.
GOutput functor_g(const ToppModel& m);

/// Model of a simply connected space with n simply connected marked
/// components: one marked point q_i_j per component i and role j, the pair
/// groupoid on them, same-component pairs as the subgroupoid and the
/// off-diagonal swaps as long arcs.
ToppModel simply_connected_model(int n);

/// The pair (X, empty): no subgroupoid, no long arcs.
ToppModel model_with_empty_a(const Groupoid& p);

/// The pair (X, X): everything in the subgroupoid, no long arcs.
ToppModel model_full_a(const Groupoid& p);

/// Object relabeling with conjugator paths: object_image a bijection and,
/// for each object v, lambda[v] an a_sub element from v to its image.
struct Relabel {
  std::vector<int> object_image;
  std::vector<int> lambda;
};

/// Conjugates every long arc gamma to inv(lambda[src]) gamma lambda[tgt].
ToppModel transport_model(const ToppModel& m, const Relabel& rl);

/// Runs the pipeline on the model and its transport and compares outputs
/// up to isomorphism.
bool delta_independence_check(const ToppModel& m, const Relabel& rl, int iso_cap = 64);

}  // namespace dgk
