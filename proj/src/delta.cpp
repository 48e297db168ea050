#include "dgk/delta.hpp"

#include <algorithm>
#include <set>

namespace dgk {

DeltaGroupoid make_delta(Groupoid g, std::vector<int> h,
                         const std::vector<std::pair<int, int>>& k_pairs) {
  DeltaGroupoid d;
  const int n = g.n_elements();
  d.k.assign(n, -1);
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  for (int e : h)
    if (e < 0 || e >= n) throw PreconditionError("make_delta: h element index out of range");
  for (auto [x, kx] : k_pairs) {
    if (x < 0 || x >= n || kx < 0 || kx >= n)
      throw PreconditionError("make_delta: k pair index out of range");
    d.k[x] = kx;
  }
  d.g = std::move(g);
  d.h = std::move(h);
  // k must be declared exactly on h; anything subtler is validate_delta's job
  for (int e = 0; e < n; ++e) {
    bool in = std::binary_search(d.h.begin(), d.h.end(), e);
    if (in && d.k[e] < 0)
      throw PreconditionError("make_delta: k undefined on h element '" + d.g.elements[e] + "'");
    if (!in && d.k[e] >= 0)
      throw PreconditionError("make_delta: k defined outside h on '" + d.g.elements[e] + "'");
  }
  return d;
}

DeltaGroupoid trivial_delta(const Groupoid& g) {
  DeltaGroupoid d;
  d.g = g;
  d.k.assign(g.n_elements(), -1);
  return d;
}

ValidationReport validate_delta(const DeltaGroupoid& d) {
  ValidationReport rep;
  const Groupoid& g = d.g;
  const int n = g.n_elements();

  if (static_cast<int>(d.k.size()) != n) {
    rep.add_structural("k-shape", "k table size does not match element count");
    return rep;
  }
  // structural phase: k is an involutive self-map of h
  for (int e : d.h) {
    int ke = d.k[e];
    if (ke < 0 || ke >= n || !d.in_h(ke)) {
      rep.add_structural("k-not-selfmap", g.elements[e]);
      continue;
    }
    if (d.k[ke] != e) rep.add_structural("k-not-involutive", g.elements[e]);
  }
  if (rep.has_structural()) {
    rep.canonicalize();
    return rep;
  }

  for (int e : d.h)
    if (!d.in_h(g.inv[e])) rep.add_axiom("h-inversion-closed", g.elements[e]);

  auto ik = [&](int y) { return g.inv[d.k[y]]; };          // i(k(y))
  auto iki = [&](int y) { return g.inv[d.k[g.inv[y]]]; };  // i(k(i(y)))

  for (int x : d.h) {
    for (int y : d.h) {
      if (!g.composable(x, y)) continue;
      int xy = g.comp[x][y];
      if (!d.in_h(xy)) continue;  // not an H-composable pair
      const std::string inst = "(" + g.elements[x] + "," + g.elements[y] + ")";

      // guard: the derived expressions need h closed under inversion
      if (!d.in_h(g.inv[x]) || !d.in_h(g.inv[y])) continue;  // reported above

      int a = d.k[xy], b = ik(y);
      bool lhs_ok = g.composable(a, b) && d.in_h(g.comp[a][b]);
      if (!lhs_ok) rep.add_axiom("h-composability-k(xy),ik(y)", inst);

      int c = d.k[x], e = iki(y);
      bool rhs_ok = g.composable(c, e) && d.in_h(g.comp[c][e]);
      if (!rhs_ok) rep.add_axiom("h-composability-k(x),iki(y)", inst);

      if (lhs_ok && rhs_ok && g.comp[a][b] != d.k[g.comp[c][e]])
        rep.add_axiom("delta-identity", inst);
    }
  }
  rep.canonicalize();
  return rep;
}

bool check_iki_kik(const DeltaGroupoid& d) {
  const Groupoid& g = d.g;
  for (int x : d.h) {
    int lhs = g.inv[d.k[g.inv[x]]];  // iki(x)
    int rhs = d.k[g.inv[d.k[x]]];    // kik(x)
    if (lhs != rhs) return false;
  }
  return true;
}

ValidationReport validate_delta_morphism(const DeltaMorphism& f) {
  ValidationReport rep = validate_groupoid_morphism(f.underlying());
  if (rep.has_structural()) return rep;
  for (int x : f.domain.h) {
    int fx = f.element_map[x];
    if (!f.codomain.in_h(fx)) {
      rep.add_axiom("h-preservation", f.domain.g.elements[x]);
      continue;
    }
    if (f.element_map[f.domain.k[x]] != f.codomain.k[fx])
      rep.add_axiom("k-equivariance", f.domain.g.elements[x]);
  }
  rep.canonicalize();
  return rep;
}

bool is_delta_morphism(const DeltaMorphism& f) { return validate_delta_morphism(f).ok(); }

DeltaMorphism identity_delta_morphism(const DeltaGroupoid& d) {
  auto id = identity_groupoid_morphism(d.g);
  return {d, d, id.object_map, id.element_map};
}

DeltaMorphism compose(const DeltaMorphism& f, const DeltaMorphism& g) {
  if (!(f.codomain == g.domain))
    throw PreconditionError("compose: codomain of first morphism differs from domain of second");
  DeltaMorphism h{f.domain, g.codomain, {}, {}};
  h.object_map.resize(f.object_map.size());
  h.element_map.resize(f.element_map.size());
  for (size_t o = 0; o < f.object_map.size(); ++o)
    h.object_map[o] = g.object_map[f.object_map[o]];
  for (size_t e = 0; e < f.element_map.size(); ++e)
    h.element_map[e] = g.element_map[f.element_map[e]];
  return h;
}

namespace {

// per-element local signature used to prune candidate images
struct ElemSig {
  bool is_unit, is_loop, self_inv, in_h, k_fixed;
  friend bool operator==(const ElemSig&, const ElemSig&) = default;
  friend auto operator<=>(const ElemSig&, const ElemSig&) = default;
};

ElemSig elem_sig(const DeltaGroupoid& d, int e) {
  const Groupoid& g = d.g;
  return {g.unit[g.src[e]] == e, g.src[e] == g.tgt[e], g.inv[e] == e, d.in_h(e),
          d.in_h(e) && d.k[e] == e};
}

// per-object signature: (vertex group order, out-degree, h-out, h-in)
struct ObjSig {
  int loops, out, hout, hin;
  friend bool operator==(const ObjSig&, const ObjSig&) = default;
  friend auto operator<=>(const ObjSig&, const ObjSig&) = default;
};

ObjSig obj_sig(const DeltaGroupoid& d, int o) {
  ObjSig s{0, 0, 0, 0};
  for (int e = 0; e < d.g.n_elements(); ++e) {
    if (d.g.src[e] == o) {
      ++s.out;
      if (d.g.tgt[e] == o) ++s.loops;
      if (d.in_h(e)) ++s.hout;
    }
    if (d.g.tgt[e] == o && d.in_h(e)) ++s.hin;
  }
  return s;
}

struct IsoSearch {
  const DeltaGroupoid& d1;
  const DeltaGroupoid& d2;
  std::vector<int> emap, omap;       // d1 -> d2
  std::vector<char> eused, oused;    // d2 side
  std::vector<ElemSig> sig1, sig2;

  IsoSearch(const DeltaGroupoid& a, const DeltaGroupoid& b) : d1(a), d2(b) {
    emap.assign(d1.g.n_elements(), -1);
    omap.assign(d1.g.n_objects(), -1);
    eused.assign(d2.g.n_elements(), 0);
    oused.assign(d2.g.n_objects(), 0);
    for (int e = 0; e < d1.g.n_elements(); ++e) sig1.push_back(elem_sig(d1, e));
    for (int e = 0; e < d2.g.n_elements(); ++e) sig2.push_back(elem_sig(d2, e));
  }

  struct Trail {
    std::vector<int> elems, objs;
  };

  bool map_object(int o, int o2, Trail& tr) {
    if (omap[o] >= 0) return omap[o] == o2;
    if (oused[o2]) return false;
    omap[o] = o2;
    oused[o2] = 1;
    tr.objs.push_back(o);
    return true;
  }

  // assign e -> e2 and propagate all forced consequences; false on clash
  bool assign(int e, int e2, Trail& tr) {
    std::vector<std::pair<int, int>> queue{{e, e2}};
    while (!queue.empty()) {
      auto [x, x2] = queue.back();
      queue.pop_back();
      if (emap[x] >= 0) {
        if (emap[x] != x2) return false;
        continue;
      }
      if (eused[x2] || sig1[x] != sig2[x2]) return false;
      if (!map_object(d1.g.src[x], d2.g.src[x2], tr)) return false;
      if (!map_object(d1.g.tgt[x], d2.g.tgt[x2], tr)) return false;
      emap[x] = x2;
      eused[x2] = 1;
      tr.elems.push_back(x);

      queue.emplace_back(d1.g.inv[x], d2.g.inv[x2]);
      if (d1.in_h(x)) queue.emplace_back(d1.k[x], d2.k[x2]);
      queue.emplace_back(d1.g.unit[d1.g.src[x]], d2.g.unit[d2.g.src[x2]]);
      for (int y = 0; y < d1.g.n_elements(); ++y) {
        if (emap[y] < 0) continue;
        if (d1.g.composable(x, y)) {
          if (!d2.g.composable(x2, emap[y])) return false;
          queue.emplace_back(d1.g.comp[x][y], d2.g.comp[x2][emap[y]]);
        }
        if (d1.g.composable(y, x)) {
          if (!d2.g.composable(emap[y], x2)) return false;
          queue.emplace_back(d1.g.comp[y][x], d2.g.comp[emap[y]][x2]);
        }
      }
    }
    return true;
  }

  void undo(const Trail& tr) {
    for (int x : tr.elems) {
      eused[emap[x]] = 0;
      emap[x] = -1;
    }
    for (int o : tr.objs) {
      oused[omap[o]] = 0;
      omap[o] = -1;
    }
  }

  int next_decision() const {
    int best = -1, best_score = -1;
    for (int e = 0; e < d1.g.n_elements(); ++e) {
      if (emap[e] >= 0) continue;
      int score = (omap[d1.g.src[e]] >= 0) + (omap[d1.g.tgt[e]] >= 0);
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    return best;
  }

  bool search() {
    int e = next_decision();
    if (e < 0) return true;
    for (int e2 = 0; e2 < d2.g.n_elements(); ++e2) {
      if (eused[e2] || sig1[e] != sig2[e2]) continue;
      if (omap[d1.g.src[e]] >= 0 && omap[d1.g.src[e]] != d2.g.src[e2]) continue;
      if (omap[d1.g.tgt[e]] >= 0 && omap[d1.g.tgt[e]] != d2.g.tgt[e2]) continue;
      Trail tr;
      if (assign(e, e2, tr)) {
        if (search()) return true;
      }
      undo(tr);
    }
    return false;
  }
};

}  // namespace

IsoResult find_isomorphism(const DeltaGroupoid& d1, const DeltaGroupoid& d2, int cap) {
  if (std::max(d1.g.n_elements(), d2.g.n_elements()) > cap)
    return {IsoStatus::cap_exceeded, std::nullopt};

  if (d1.g.n_elements() != d2.g.n_elements() || d1.g.n_objects() != d2.g.n_objects() ||
      d1.h_size() != d2.h_size())
    return {IsoStatus::none, std::nullopt};

  // multiset invariants before any search
  {
    std::multiset<ElemSig> s1, s2;
    for (int e = 0; e < d1.g.n_elements(); ++e) s1.insert(elem_sig(d1, e));
    for (int e = 0; e < d2.g.n_elements(); ++e) s2.insert(elem_sig(d2, e));
    if (s1 != s2) return {IsoStatus::none, std::nullopt};
    std::multiset<ObjSig> o1, o2;
    for (int o = 0; o < d1.g.n_objects(); ++o) o1.insert(obj_sig(d1, o));
    for (int o = 0; o < d2.g.n_objects(); ++o) o2.insert(obj_sig(d2, o));
    if (o1 != o2) return {IsoStatus::none, std::nullopt};
  }

  IsoSearch search(d1, d2);
  if (!search.search()) return {IsoStatus::none, std::nullopt};

  // objects untouched by any element (possible in principle) get matched greedily
  for (int o = 0; o < d1.g.n_objects(); ++o) {
    if (search.omap[o] >= 0) continue;
    for (int o2 = 0; o2 < d2.g.n_objects(); ++o2)
      if (!search.oused[o2]) {
        search.omap[o] = o2;
        search.oused[o2] = 1;
        break;
      }
  }

  DeltaMorphism f{d1, d2, search.omap, search.emap};
  if (!is_delta_morphism(f)) return {IsoStatus::none, std::nullopt};  // should not happen
  return {IsoStatus::found, std::move(f)};
}

}  // namespace dgk
