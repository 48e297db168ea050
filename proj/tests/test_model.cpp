#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "dgk/constructions.hpp"
#include "dgk/topo_model.hpp"
#include "helpers.hpp"

using namespace dgk;

TEST_CASE("simply connected models validate") {
  for (int n : {1, 2, 3}) {
    ToppModel m = simply_connected_model(n);
    CHECK(validate_topp_model(m).ok());
    CHECK(static_cast<int>(m.long_arcs().size()) == n * (n - 1));
  }
}

TEST_CASE("model invariant violations are reported") {
  // long arc whose inverse is not marked
  ToppModel m = simply_connected_model(2);
  int arc = m.long_arcs().front();
  m.in_l[m.p.inv[arc]] = 0;
  CHECK(validate_topp_model(m).has_code("long-arc-inversion"));

  // a loop long arc that is not self-inverse (endpoint condition)
  Groupoid c3 = cyclic_group_groupoid(3);
  ToppModel bad;
  bad.p = c3;
  bad.in_a.assign(3, 0);
  bad.in_a[c3.element_index("1")] = 1;
  bad.in_l.assign(3, 0);
  bad.in_l[c3.element_index("t")] = 1;
  bad.in_l[c3.element_index("t^2")] = 1;  // inversion-closed, but loops != self-inverse
  CHECK(validate_topp_model(bad).has_code("long-arc-endpoints"));

  // long arc inside the subgroupoid
  ToppModel m2 = simply_connected_model(2);
  int a_elem = -1;
  for (int e = 0; e < m2.p.n_elements(); ++e)
    if (m2.in_l[e]) {
      m2.in_a[e] = 1;
      a_elem = e;
      break;
    }
  REQUIRE(a_elem >= 0);
  CHECK(validate_topp_model(m2).has_code("long-arc-in-a"));
}

TEST_CASE("short arc detection on the model families") {
  // no long arcs: no short arcs
  ToppModel none = model_full_a(cyclic_group_groupoid(4));
  CHECK(short_arcs(none).arcs.empty());

  // n = 1: single component, no off-diagonal classes
  CHECK(short_arcs(simply_connected_model(1)).arcs.empty());

  ShortArcTable t3 = short_arcs(simply_connected_model(3));
  REQUIRE(t3.ok());
  CHECK(t3.arcs.size() == 6);
  for (const ShortArc& a : t3.arcs) {
    CHECK(a.solutions.size() == 1);  // unique witness pair in this family
    CHECK(a.alpha >= 0);
    CHECK(a.beta >= 0);
    CHECK(a.gamma >= 0);
  }
}

TEST_CASE("p0/p1 are determined by arc endpoints; p1 flips on the k-partner") {
  for (int n : {3, 4}) {
    ToppModel m = simply_connected_model(n);
    ShortArcTable t = short_arcs(m);
    REQUIRE(t.ok());
    for (const ShortArc& a : t.arcs)
      for (const ShortArc& b : t.arcs) {
        if (m.p.src[a.element] == m.p.src[b.element]) CHECK(a.alpha == b.alpha);
        if (m.p.tgt[a.element] == m.p.tgt[b.element]) CHECK(a.beta == b.beta);
      }
    // if beta = p1(x) and z is the k-witness of x, then p1(z) = beta^-1
    for (const ShortArc& a : t.arcs)
      for (auto [y, z] : a.solutions) {
        int zpos = t.arc_pos(z);
        REQUIRE(zpos >= 0);
        CHECK(t.arcs[zpos].beta == m.p.inv[a.beta]);
      }
  }
}

TEST_CASE("equivalence closure: discrete and synthetic merging cases") {
  ShortArcTable t3 = short_arcs(simply_connected_model(3));
  auto classes = equivalence_closure(t3);
  CHECK(classes.size() == 6);  // unique witnesses: the discrete partition
  for (const auto& c : classes) CHECK(c.size() == 1);

  // synthetic table: one arc with two witness pairs sharing y but not z
  ShortArcTable synth;
  synth.arcs.push_back({10, 0, 0, 0, {{11, 12}, {11, 13}}});
  synth.arcs.push_back({11, 0, 0, 0, {}});
  synth.arcs.push_back({12, 0, 0, 0, {}});
  synth.arcs.push_back({13, 0, 0, 0, {}});
  auto merged = equivalence_closure(synth);
  std::set<std::vector<int>> as_set(merged.begin(), merged.end());
  CHECK(as_set.count({12, 13}) == 1);  // the two z's collapse
  CHECK(as_set.count({10}) == 1);
  CHECK(as_set.count({11}) == 1);
}

TEST_CASE("functor on the empty-subspace family gives the empty structure") {
  GOutput out = functor_g(model_with_empty_a(pair_groupoid({"a", "b"})));
  REQUIRE(out.accepted);
  CHECK(out.delta.g.is_empty());
  CHECK(out.delta.h_size() == 0);
}

TEST_CASE("functor on the full-subspace family returns the fundamental group") {
  Groupoid c4 = cyclic_group_groupoid(4);
  GOutput out = functor_g(model_full_a(c4));
  REQUIRE(out.accepted);
  CHECK(out.delta.h_size() == 0);
  auto iso = find_isomorphism(out.delta, trivial_delta(c4));
  CHECK(iso.status == IsoStatus::found);
}

TEST_CASE("functor output matches the x3 family for small n") {
  for (int n : {1, 2, 3}) {
    GOutput out = functor_g(simply_connected_model(n));
    REQUIRE(out.accepted);
    CHECK(out.rounds == 1);
    CHECK(validate_delta(out.delta).ok());
    CHECK(check_iki_kik(out.delta));
    auto iso = find_isomorphism(out.delta, x3_delta(n));
    CHECK(iso.status == IsoStatus::found);
  }
}

TEST_CASE("transport preconditions") {
  ToppModel m = simply_connected_model(2);
  const int no = m.p.n_objects();
  Relabel identity;
  for (int v = 0; v < no; ++v) {
    identity.object_image.push_back(v);
    identity.lambda.push_back(m.p.unit[v]);
  }
  CHECK(delta_independence_check(m, identity));

  Relabel bad = identity;
  bad.lambda[0] = m.long_arcs().front();  // not an a_sub element
  CHECK_THROWS_AS(transport_model(m, bad), PreconditionError);

  Relabel wrong_endpoints = identity;
  wrong_endpoints.object_image[0] = 1;  // image differs but lambda stays a unit
  wrong_endpoints.object_image[1] = 0;
  CHECK_THROWS_AS(transport_model(m, wrong_endpoints), PreconditionError);
}

TEST_CASE("delta independence under endpoint relabelings") {
  ToppModel m = simply_connected_model(3);
  const Groupoid& p = m.p;
  const int n = 3;
  auto opix = [&](int i, int j) { return i * n + j; };

  // swap two same-component points q1_2 <-> q1_3, conjugating by the
  // connecting a_sub paths
  Relabel swap12;
  for (int v = 0; v < p.n_objects(); ++v) {
    swap12.object_image.push_back(v);
    swap12.lambda.push_back(p.unit[v]);
  }
  int u = opix(0, 1), w = opix(0, 2);
  swap12.object_image[u] = w;
  swap12.object_image[w] = u;
  swap12.lambda[u] = p.comp[p.unit[u]][p.element_index("(q1_2,q1_3)")];
  swap12.lambda[w] = p.element_index("(q1_3,q1_2)");
  CHECK(delta_independence_check(m, swap12));

  // 3-cycle within component 2
  Relabel cyc;
  for (int v = 0; v < p.n_objects(); ++v) {
    cyc.object_image.push_back(v);
    cyc.lambda.push_back(p.unit[v]);
  }
  int a = opix(1, 0), b = opix(1, 1), c = opix(1, 2);
  cyc.object_image[a] = b;
  cyc.object_image[b] = c;
  cyc.object_image[c] = a;
  cyc.lambda[a] = p.element_index("(q2_1,q2_2)");
  cyc.lambda[b] = p.element_index("(q2_2,q2_3)");
  cyc.lambda[c] = p.element_index("(q2_3,q2_1)");
  CHECK(delta_independence_check(m, cyc));
}

TEST_CASE("parity-bundle model: witness merging and a genuine quotient") {
  ToppModel m = testutil::parity_bundle_model();
  REQUIRE(validate_groupoid(m.p).ok());
  REQUIRE(validate_topp_model(m).ok());

  ShortArcTable t = short_arcs(m);
  REQUIRE(t.ok());
  CHECK(t.arcs.size() == 12);  // cross-point pairs of each component, both parities
  for (const ShortArc& a : t.arcs) CHECK(a.solutions.size() == 2);

  auto classes = equivalence_closure(t);
  CHECK(classes.size() == 6);
  for (const auto& c : classes) {
    REQUIRE(c.size() == 2);  // the two parities of one underlying pair
    CHECK(m.p.src[c[0]] == m.p.src[c[1]]);
    CHECK(m.p.tgt[c[0]] == m.p.tgt[c[1]]);
  }

  GOutput out = functor_g(m);
  REQUIRE(out.accepted);
  CHECK(out.rounds == 1);
  CHECK(out.delta.g.n_elements() == 12);  // parity collapsed: 3 pair groupoids
  CHECK(out.delta.h_size() == 6);
  auto iso = find_isomorphism(
      trivial_delta(out.delta.g),
      trivial_delta(disjoint_union({pair_groupoid({"a", "b"}), pair_groupoid({"a", "b"}),
                                    pair_groupoid({"a", "b"})})));
  CHECK(iso.status == IsoStatus::found);

  // parity members land in one class; k swaps the component pairs involutively
  const GroupoidMorphism& proj = out.projection;
  const Groupoid& sub = proj.domain;
  int a0 = sub.element_index("(p1,p2;0)");
  int a1 = sub.element_index("(p1,p2;1)");
  REQUIRE(a0 >= 0);
  REQUIRE(a1 >= 0);
  CHECK(proj.element_map[a0] == proj.element_map[a1]);
  int cls = proj.element_map[a0];
  CHECK(out.delta.in_h(cls));
  int kcls = out.delta.k[cls];
  int z0 = sub.element_index("(r2,r1;0)");
  REQUIRE(z0 >= 0);
  CHECK(kcls == proj.element_map[z0]);
  CHECK(out.delta.k[kcls] == cls);
}

TEST_CASE("independence under a parity-twisted conjugator") {
  // lambda at q1 is the parity-1 loop: the transported long arcs genuinely
  // change (they pick up the parity), yet the outputs stay isomorphic
  ToppModel m = testutil::parity_bundle_model();
  const Groupoid& p = m.p;
  Relabel rl;
  for (int v = 0; v < p.n_objects(); ++v) {
    rl.object_image.push_back(v);
    rl.lambda.push_back(p.unit[v]);
  }
  int q1 = p.object_index("q1");
  rl.lambda[q1] = p.element_index("(q1,q1;1)");
  ToppModel moved = transport_model(m, rl);
  CHECK(moved.in_l != m.in_l);  // the long-arc set really changed
  CHECK(validate_topp_model(moved).ok());
  CHECK(delta_independence_check(m, rl));
}

TEST_CASE("random pair-groupoid models: reject with report or output valid") {
  // deterministic generator; every accepted output must re-validate
  std::mt19937 rng(20240817);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int ncomp = 1 + static_cast<int>(rng() % 3);
    std::vector<std::string> pts;
    std::vector<int> comp_of;
    for (int c = 0; c < ncomp; ++c) {
      int size = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < size; ++s) {
        pts.push_back("p" + std::to_string(c) + "_" + std::to_string(s));
        comp_of.push_back(c);
      }
    }
    ToppModel m;
    m.p = pair_groupoid(pts);
    const int np = static_cast<int>(pts.size());
    m.in_a.assign(np * np, 0);
    m.in_l.assign(np * np, 0);
    for (int u = 0; u < np; ++u)
      for (int v = 0; v < np; ++v)
        if (comp_of[u] == comp_of[v]) m.in_a[u * np + v] = 1;
    for (int u = 0; u < np; ++u)
      for (int v = u + 1; v < np; ++v)
        if (comp_of[u] != comp_of[v] && rng() % 3 == 0) {
          m.in_l[u * np + v] = 1;
          m.in_l[v * np + u] = 1;
        }
    REQUIRE(validate_topp_model(m).ok());
    GOutput out = functor_g(m);
    if (out.accepted) {
      ++accepted;
      CHECK(validate_delta(out.delta).ok());
      CHECK(check_iki_kik(out.delta));
    } else {
      ++rejected;
      CHECK(!out.issues.ok());
    }
  }
  CHECK(accepted + rejected == 60);
  CHECK(accepted > 0);  // the family does contain genuine models
}
