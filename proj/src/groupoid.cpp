#include "dgk/groupoid.hpp"

#include <algorithm>
#include <set>

#include "dgk/union_find.hpp"

namespace dgk {

int Groupoid::object_index(const std::string& id) const {
  auto it = std::find(objects.begin(), objects.end(), id);
  return it == objects.end() ? -1 : static_cast<int>(it - objects.begin());
}

int Groupoid::element_index(const std::string& id) const {
  auto it = std::find(elements.begin(), elements.end(), id);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

void GroupoidBuilder::add_object(const std::string& id) {
  if (obj_ix_.count(id)) throw PreconditionError("duplicate object id '" + id + "'");
  obj_ix_[id] = static_cast<int>(g_.objects.size());
  g_.objects.push_back(id);
  g_.unit.push_back(-1);
}

void GroupoidBuilder::add_element(const std::string& id, const std::string& src_obj,
                                  const std::string& tgt_obj) {
  if (elem_ix_.count(id)) throw PreconditionError("duplicate element id '" + id + "'");
  elem_ix_[id] = static_cast<int>(g_.elements.size());
  g_.elements.push_back(id);
  g_.src.push_back(obj(src_obj));
  g_.tgt.push_back(obj(tgt_obj));
  g_.inv.push_back(-1);
}

int GroupoidBuilder::obj(const std::string& id) const {
  auto it = obj_ix_.find(id);
  if (it == obj_ix_.end()) throw PreconditionError("unknown object id '" + id + "'");
  return it->second;
}

int GroupoidBuilder::elem(const std::string& id) const {
  auto it = elem_ix_.find(id);
  if (it == elem_ix_.end()) throw PreconditionError("unknown element id '" + id + "'");
  return it->second;
}

void GroupoidBuilder::set_inv(const std::string& x, const std::string& y) {
  g_.inv[elem(x)] = elem(y);
}

void GroupoidBuilder::set_unit(const std::string& obj_id, const std::string& elem_id) {
  g_.unit[obj(obj_id)] = elem(elem_id);
}

void GroupoidBuilder::set_comp(const std::string& x, const std::string& y,
                               const std::string& xy) {
  if (g_.comp.empty()) g_.comp.assign(g_.elements.size(), {});
  if (g_.comp.size() != g_.elements.size())
    g_.comp.resize(g_.elements.size());
  for (auto& row : g_.comp) row.resize(g_.elements.size(), -1);
  g_.comp[elem(x)][elem(y)] = elem(xy);
}

Groupoid GroupoidBuilder::build() {
  const size_t n = g_.elements.size();
  if (g_.comp.size() != n) g_.comp.resize(n);
  for (auto& row : g_.comp) row.resize(n, -1);
  for (size_t e = 0; e < n; ++e)
    if (g_.inv[e] < 0)
      throw PreconditionError("element '" + g_.elements[e] + "' has no inverse set");
  for (size_t o = 0; o < g_.objects.size(); ++o)
    if (g_.unit[o] < 0)
      throw PreconditionError("object '" + g_.objects[o] + "' has no unit set");
  return std::move(g_);
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport rep;
  const int n = g.n_elements();
  const int m = g.n_objects();

  // table shape and index ranges
  bool shape_ok = static_cast<int>(g.src.size()) == n && static_cast<int>(g.tgt.size()) == n &&
                  static_cast<int>(g.inv.size()) == n && static_cast<int>(g.unit.size()) == m &&
                  static_cast<int>(g.comp.size()) == n;
  for (const auto& row : g.comp) shape_ok = shape_ok && static_cast<int>(row.size()) == n;
  if (!shape_ok) {
    rep.add_structural("table-shape", "src/tgt/inv/unit/comp sizes do not match element/object counts");
    return rep;
  }
  for (int e = 0; e < n; ++e) {
    if (g.src[e] < 0 || g.src[e] >= m || g.tgt[e] < 0 || g.tgt[e] >= m)
      rep.add_structural("dangling-object", "element " + g.elements[e]);
    if (g.inv[e] < 0 || g.inv[e] >= n)
      rep.add_structural("dangling-inverse", "element " + g.elements[e]);
  }
  for (int o = 0; o < m; ++o)
    if (g.unit[o] < 0 || g.unit[o] >= n)
      rep.add_structural("dangling-unit", "object " + g.objects[o]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.comp[x][y] >= n) rep.add_structural("dangling-composite", g.elements[x] + "," + g.elements[y]);
  if (rep.has_structural()) {
    rep.canonicalize();
    return rep;
  }

  // composition domain: defined exactly on composable pairs
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool defined = g.comp[x][y] >= 0;
      if (defined && !g.composable(x, y))
        rep.add_structural("comp-domain",
                           "comp(" + g.elements[x] + "," + g.elements[y] + ") defined but tgt/src differ");
      if (!defined && g.composable(x, y))
        rep.add_structural("comp-missing",
                           "comp(" + g.elements[x] + "," + g.elements[y] + ") undefined");
    }
  }
  if (rep.has_structural()) {
    rep.canonicalize();
    return rep;
  }

  // endpoints of composites
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = g.comp[x][y];
      if (z < 0) continue;
      if (g.src[z] != g.src[x] || g.tgt[z] != g.tgt[y])
        rep.add_axiom("comp-endpoints", g.elements[x] + "," + g.elements[y]);
    }

  // units
  for (int o = 0; o < m; ++o) {
    int u = g.unit[o];
    if (g.src[u] != o || g.tgt[u] != o)
      rep.add_axiom("unit-endpoints", g.objects[o]);
  }
  for (int x = 0; x < n; ++x) {
    int ul = g.unit[g.src[x]], ur = g.unit[g.tgt[x]];
    if (g.comp[ul][x] != x)
      rep.add_axiom("unit-identity", "unit(src)*" + g.elements[x]);
    if (g.comp[x][ur] != x)
      rep.add_axiom("unit-identity", g.elements[x] + "*unit(tgt)");
  }

  // inverses
  for (int x = 0; x < n; ++x) {
    int ix = g.inv[x];
    if (g.src[ix] != g.tgt[x] || g.tgt[ix] != g.src[x]) {
      rep.add_axiom("inverse-endpoints", g.elements[x]);
      continue;
    }
    if (g.comp[x][ix] != g.unit[g.src[x]])
      rep.add_axiom("inverse-law", g.elements[x] + "*inv");
    if (g.comp[ix][x] != g.unit[g.tgt[x]])
      rep.add_axiom("inverse-law", "inv*" + g.elements[x]);
  }

  // associativity over all composable triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!g.composable(x, y)) continue;
      int xy = g.comp[x][y];
      for (int z = 0; z < n; ++z) {
        if (!g.composable(y, z)) continue;
        int yz = g.comp[y][z];
        int lhs = (xy >= 0 && g.composable(xy, z)) ? g.comp[xy][z] : -1;
        int rhs = (yz >= 0 && g.composable(x, yz)) ? g.comp[x][yz] : -1;
        if (lhs != rhs)
          rep.add_axiom("associativity",
                        g.elements[x] + "," + g.elements[y] + "," + g.elements[z]);
      }
    }

  rep.canonicalize();
  return rep;
}

ValidationReport validate_groupoid_morphism(const GroupoidMorphism& f) {
  ValidationReport rep;
  const Groupoid& a = f.domain;
  const Groupoid& b = f.codomain;
  if (static_cast<int>(f.object_map.size()) != a.n_objects() ||
      static_cast<int>(f.element_map.size()) != a.n_elements()) {
    rep.add_structural("map-shape", "object/element map sizes do not match domain");
    return rep;
  }
  for (int o = 0; o < a.n_objects(); ++o)
    if (f.object_map[o] < 0 || f.object_map[o] >= b.n_objects())
      rep.add_structural("dangling-object-image", a.objects[o]);
  for (int e = 0; e < a.n_elements(); ++e)
    if (f.element_map[e] < 0 || f.element_map[e] >= b.n_elements())
      rep.add_structural("dangling-element-image", a.elements[e]);
  if (rep.has_structural()) return rep;

  for (int e = 0; e < a.n_elements(); ++e) {
    int fe = f.element_map[e];
    if (b.src[fe] != f.object_map[a.src[e]] || b.tgt[fe] != f.object_map[a.tgt[e]])
      rep.add_axiom("morphism-endpoints", a.elements[e]);
    if (f.element_map[a.inv[e]] != b.inv[fe])
      rep.add_axiom("morphism-inverse", a.elements[e]);
  }
  for (int o = 0; o < a.n_objects(); ++o)
    if (f.element_map[a.unit[o]] != b.unit[f.object_map[o]])
      rep.add_axiom("morphism-unit", a.objects[o]);
  for (int x = 0; x < a.n_elements(); ++x)
    for (int y = 0; y < a.n_elements(); ++y) {
      int z = a.comp[x][y];
      if (z < 0) continue;
      int fx = f.element_map[x], fy = f.element_map[y];
      if (!b.composable(fx, fy) || b.comp[fx][fy] != f.element_map[z])
        rep.add_axiom("morphism-composition", a.elements[x] + "," + a.elements[y]);
    }
  rep.canonicalize();
  return rep;
}

bool is_groupoid_morphism(const GroupoidMorphism& m) {
  return validate_groupoid_morphism(m).ok();
}

GroupoidMorphism identity_groupoid_morphism(const Groupoid& g) {
  GroupoidMorphism f{g, g, {}, {}};
  f.object_map.resize(g.n_objects());
  f.element_map.resize(g.n_elements());
  for (int o = 0; o < g.n_objects(); ++o) f.object_map[o] = o;
  for (int e = 0; e < g.n_elements(); ++e) f.element_map[e] = e;
  return f;
}

Groupoid pair_groupoid(const std::vector<std::string>& objects) {
  {
    std::set<std::string> seen(objects.begin(), objects.end());
    if (seen.size() != objects.size())
      throw PreconditionError("pair_groupoid: duplicate object ids");
  }
  Groupoid g;
  g.objects = objects;
  const int m = g.n_objects();
  g.unit.resize(m);
  auto eix = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      g.elements.push_back("(" + objects[a] + "," + objects[b] + ")");
      g.src.push_back(a);
      g.tgt.push_back(b);
      g.inv.push_back(eix(b, a));
    }
  for (int a = 0; a < m; ++a) g.unit[a] = eix(a, a);
  g.comp.assign(g.elements.size(), std::vector<int>(g.elements.size(), -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) g.comp[eix(a, b)][eix(b, c)] = eix(a, c);
  return g;
}

Groupoid disjoint_union(const std::vector<Groupoid>& gs) {
  Groupoid g;
  std::vector<int> obj_off, elem_off;
  for (size_t i = 0; i < gs.size(); ++i) {
    const std::string tag = std::to_string(i) + ":";
    obj_off.push_back(g.n_objects());
    elem_off.push_back(g.n_elements());
    for (const auto& o : gs[i].objects) g.objects.push_back(tag + o);
    for (int e = 0; e < gs[i].n_elements(); ++e) {
      g.elements.push_back(tag + gs[i].elements[e]);
      g.src.push_back(obj_off[i] + gs[i].src[e]);
      g.tgt.push_back(obj_off[i] + gs[i].tgt[e]);
      g.inv.push_back(elem_off[i] + gs[i].inv[e]);
    }
    for (int o = 0; o < gs[i].n_objects(); ++o)
      g.unit.push_back(elem_off[i] + gs[i].unit[o]);
  }
  g.comp.assign(g.n_elements(), std::vector<int>(g.n_elements(), -1));
  for (size_t i = 0; i < gs.size(); ++i)
    for (int x = 0; x < gs[i].n_elements(); ++x)
      for (int y = 0; y < gs[i].n_elements(); ++y)
        if (gs[i].comp[x][y] >= 0)
          g.comp[elem_off[i] + x][elem_off[i] + y] = elem_off[i] + gs[i].comp[x][y];
  return g;
}

Groupoid group_groupoid(const std::string& object,
                        const std::vector<std::string>& element_names,
                        const std::vector<std::vector<int>>& mul, int identity) {
  const int n = static_cast<int>(element_names.size());
  Groupoid g;
  g.objects = {object};
  g.elements = element_names;
  g.src.assign(n, 0);
  g.tgt.assign(n, 0);
  g.unit = {identity};
  g.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul[x][y] == identity && mul[y][x] == identity) g.inv[x] = y;
    if (g.inv[x] < 0)
      throw PreconditionError("group_groupoid: '" + element_names[x] + "' has no inverse");
  }
  g.comp = mul;
  return g;
}

Groupoid cyclic_group_groupoid(int n) {
  if (n < 1) throw PreconditionError("cyclic_group_groupoid: n must be >= 1");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return group_groupoid("*", names, mul, 0);
}

QuotientResult quotient_by_congruence(const Groupoid& g,
                                      const std::vector<std::pair<int, int>>& pairs) {
  const int n = g.n_elements();
  for (const auto& [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw PreconditionError("quotient_by_congruence: element index out of range");
    if (g.src[x] != g.src[y] || g.tgt[x] != g.tgt[y])
      throw PreconditionError("quotient_by_congruence: pair (" + g.elements[x] + "," +
                              g.elements[y] + ") is not parallel");
  }

  // worklist congruence closure over a union-find partition
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work(pairs);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    work.emplace_back(g.inv[x], g.inv[y]);
    for (int a = 0; a < n; ++a) {
      if (g.composable(a, x) && g.comp[a][x] >= 0 && g.comp[a][y] >= 0)
        work.emplace_back(g.comp[a][x], g.comp[a][y]);
      if (g.composable(x, a) && g.comp[x][a] >= 0 && g.comp[y][a] >= 0)
        work.emplace_back(g.comp[x][a], g.comp[y][a]);
    }
  }

  // classes keyed by representative (smallest member index)
  std::vector<int> rep_of(n), cls(n, -1);
  for (int e = 0; e < n; ++e) rep_of[e] = uf.find(e);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e)
    if (rep_of[e] == e) {
      cls[e] = static_cast<int>(reps.size());
      reps.push_back(e);
    }
  for (int e = 0; e < n; ++e) cls[e] = cls[rep_of[e]];

  Groupoid q;
  q.objects = g.objects;
  for (int r : reps) {
    q.elements.push_back(g.elements[r]);
    q.src.push_back(g.src[r]);
    q.tgt.push_back(g.tgt[r]);
    q.inv.push_back(cls[g.inv[r]]);
  }
  q.unit.resize(g.n_objects());
  for (int o = 0; o < g.n_objects(); ++o) q.unit[o] = cls[g.unit[o]];
  q.comp.assign(reps.size(), std::vector<int>(reps.size(), -1));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      if (q.tgt[i] == q.src[j]) {
        int z = g.comp[reps[i]][reps[j]];
        if (z < 0)
          throw PreconditionError("quotient_by_congruence: input composition table incomplete at (" +
                                  g.elements[reps[i]] + "," + g.elements[reps[j]] + ")");
        q.comp[i][j] = cls[z];
      }

  GroupoidMorphism proj{g, q, {}, cls};
  proj.object_map.resize(g.n_objects());
  for (int o = 0; o < g.n_objects(); ++o) proj.object_map[o] = o;
  return {std::move(q), std::move(proj), cls};
}

QuotientResult quotient_by_congruence_ids(
    const Groupoid& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> ix;
  for (const auto& [x, y] : pairs) {
    int xi = g.element_index(x), yi = g.element_index(y);
    if (xi < 0 || yi < 0)
      throw PreconditionError("quotient_by_congruence: unknown element id '" +
                              (xi < 0 ? x : y) + "'");
    ix.emplace_back(xi, yi);
  }
  return quotient_by_congruence(g, ix);
}

}  // namespace dgk
