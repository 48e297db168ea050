#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dgk/delta.hpp"
#include "dgk/groupoid.hpp"
#include "dgk/topo_model.hpp"

namespace dgk::testutil {

// Three two-point "annulus" components whose internal path classes carry a
// parity, with one long-arc pair per edge Q->P, P->R, Q->R.  Every short
// arc has two witness pairs differing by parity, so the minimal
// equivalence and the congruence quotient both do real work.
inline ToppModel parity_bundle_model() {
  const int npts = 6;  // p1 p2 q1 q2 r1 r2
  const std::vector<std::string> pts = {"p1", "p2", "q1", "q2", "r1", "r2"};
  const std::vector<int> comp_of = {0, 0, 1, 1, 2, 2};
  auto eix = [npts](int i, int j, int s) { return (i * npts + j) * 2 + s; };

  Groupoid g;
  g.objects = pts;
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      for (int s = 0; s < 2; ++s) {
        g.elements.push_back("(" + pts[i] + "," + pts[j] + ";" + std::to_string(s) + ")");
        g.src.push_back(i);
        g.tgt.push_back(j);
        g.inv.push_back(eix(j, i, s));
      }
  g.unit.resize(npts);
  for (int i = 0; i < npts; ++i) g.unit[i] = eix(i, i, 0);
  g.comp.assign(g.n_elements(), std::vector<int>(g.n_elements(), -1));
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      for (int k = 0; k < npts; ++k)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            g.comp[eix(i, j, s)][eix(j, k, t)] = eix(i, k, (s + t) % 2);

  ToppModel m;
  m.p = std::move(g);
  m.in_a.assign(m.p.n_elements(), 0);
  m.in_l.assign(m.p.n_elements(), 0);
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      if (comp_of[i] == comp_of[j])
        for (int s = 0; s < 2; ++s) m.in_a[eix(i, j, s)] = 1;
  for (auto [u, v] : {std::pair{2, 0}, {1, 4}, {3, 5}}) {  // q1->p1, p2->r1, q2->r2
    m.in_l[eix(u, v, 0)] = 1;
    m.in_l[eix(v, u, 0)] = 1;
  }
  return m;
}

// S3 with left-to-right composition: (f then g)(x) = g(f(x)).
// Order: e, (12), (13), (23), (123), (132).
inline Groupoid s3_groupoid() {
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::vector<int>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int f = 0; f < 6; ++f)
    for (int g = 0; g < 6; ++g) {
      std::vector<int> fg(3);
      for (int x = 0; x < 3; ++x) fg[x] = perms[g][perms[f][x]];
      mul[f][g] = index_of(fg);
    }
  return group_groupoid("*", names, mul, 0);
}

// number of H-composable pairs of a Delta-groupoid
inline int h_composable_pairs(const DeltaGroupoid& d) {
  int count = 0;
  for (int x : d.h)
    for (int y : d.h)
      if (d.g.composable(x, y) && d.in_h(d.g.comp[x][y])) ++count;
  return count;
}

// Brute-force enumeration of all groupoid morphisms a -> b (test oracle,
// independent of any search in the library): every element-map tuple is
// tried and filtered by the axioms.
inline std::vector<GroupoidMorphism> enumerate_groupoid_morphisms(const Groupoid& a,
                                                                  const Groupoid& b) {
  std::vector<GroupoidMorphism> out;
  const int n = a.n_elements(), m = b.n_elements();
  if (n == 0) {
    GroupoidMorphism f{a, b, {}, {}};
    if (a.n_objects() == 0) out.push_back(f);
    return out;
  }
  std::vector<int> emap(n, 0);
  for (;;) {
    // derive the object map from src/tgt images; reject inconsistencies
    std::vector<int> omap(a.n_objects(), -1);
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      for (auto [ao, bo] : {std::pair{a.src[e], b.src[emap[e]]}, {a.tgt[e], b.tgt[emap[e]]}}) {
        if (omap[ao] < 0) omap[ao] = bo;
        ok = ok && omap[ao] == bo;
      }
    }
    if (ok && std::find(omap.begin(), omap.end(), -1) == omap.end()) {
      GroupoidMorphism f{a, b, omap, emap};
      if (is_groupoid_morphism(f)) out.push_back(std::move(f));
    }
    int i = n - 1;
    while (i >= 0 && emap[i] == m - 1) emap[i--] = 0;
    if (i < 0) break;
    ++emap[i];
  }
  return out;
}

}  // namespace dgk::testutil
