#include "dgk/topo_model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dgk/union_find.hpp"

namespace dgk {

std::vector<int> ToppModel::a_elements() const {
  std::vector<int> out;
  for (int e = 0; e < p.n_elements(); ++e)
    if (in_a[e]) out.push_back(e);
  return out;
}

std::vector<int> ToppModel::long_arcs() const {
  std::vector<int> out;
  for (int e = 0; e < p.n_elements(); ++e)
    if (in_l[e]) out.push_back(e);
  return out;
}

ValidationReport validate_topp_model(const ToppModel& m) {
  ValidationReport rep = validate_groupoid(m.p);
  if (!rep.ok()) return rep;
  const Groupoid& g = m.p;
  const int n = g.n_elements();
  if (static_cast<int>(m.in_a.size()) != n || static_cast<int>(m.in_l.size()) != n) {
    rep.add_structural("flag-shape", "in_a/in_l sizes do not match element count");
    return rep;
  }

  // a_sub is a subgroupoid: units on touched objects, inversion, composition
  for (int e = 0; e < n; ++e) {
    if (!m.in_a[e]) continue;
    if (!m.in_a[g.unit[g.src[e]]] || !m.in_a[g.unit[g.tgt[e]]])
      rep.add_axiom("a-sub-units", g.elements[e]);
    if (!m.in_a[g.inv[e]]) rep.add_axiom("a-sub-inversion", g.elements[e]);
    for (int f = 0; f < n; ++f)
      if (m.in_a[f] && g.composable(e, f) && !m.in_a[g.comp[e][f]])
        rep.add_axiom("a-sub-composition", g.elements[e] + "," + g.elements[f]);
  }

  for (int e = 0; e < n; ++e) {
    if (!m.in_l[e]) continue;
    if (m.in_a[e]) rep.add_axiom("long-arc-in-a", g.elements[e]);
    if (!m.in_l[g.inv[e]]) rep.add_axiom("long-arc-inversion", g.elements[e]);
    // endpoint condition: a long arc is a loop iff it is self-inverse
    if ((g.src[e] == g.tgt[e]) != (g.inv[e] == e))
      rep.add_axiom("long-arc-endpoints", g.elements[e]);
  }
  rep.canonicalize();
  return rep;
}

int ShortArcTable::arc_pos(int element) const {
  for (size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].element == element) return static_cast<int>(i);
  return -1;
}

ShortArcTable short_arcs(const ToppModel& m) {
  ShortArcTable out;
  const Groupoid& g = m.p;
  const std::vector<int> a = m.a_elements();
  const std::vector<int> l = m.long_arcs();

  for (int x : a) {
    ShortArc arc;
    arc.element = x;
    for (int alpha : l) {
      if (!g.composable(alpha, x)) continue;
      for (int beta : l) {
        if (!g.composable(x, beta)) continue;
        const int w = g.comp[g.comp[alpha][x]][beta];
        for (int gamma : l) {
          for (int y : a) {
            if (!(g.composable(y, gamma) && g.src[y] == g.src[w])) continue;
            // z is forced: z = gamma^-1 y^-1 w
            const int z = g.comp[g.inv[gamma]][g.comp[g.inv[y]][w]];
            if (!m.in_a[z]) continue;
            if (g.comp[g.comp[y][gamma]][z] != w) continue;  // defensive
            if (arc.alpha < 0) {
              arc.alpha = alpha;
              arc.beta = beta;
              arc.gamma = gamma;
            } else if (arc.alpha != alpha || arc.beta != beta || arc.gamma != gamma) {
              out.issues.add_axiom(
                  "triple-not-unique",
                  "arc " + g.elements[x] + ": (" + g.elements[arc.alpha] + "," +
                      g.elements[arc.beta] + "," + g.elements[arc.gamma] + ") vs (" +
                      g.elements[alpha] + "," + g.elements[beta] + "," + g.elements[gamma] + ")");
              continue;
            }
            arc.solutions.emplace_back(y, z);
          }
        }
      }
    }
    if (arc.alpha >= 0) {
      std::sort(arc.solutions.begin(), arc.solutions.end());
      arc.solutions.erase(std::unique(arc.solutions.begin(), arc.solutions.end()),
                          arc.solutions.end());
      out.arcs.push_back(std::move(arc));
    }
  }
  out.issues.canonicalize();
  return out;
}

std::vector<std::vector<int>> equivalence_closure(const ShortArcTable& t) {
  // union-find over arc elements; constraints are static, so one pass over
  // the solution lists reaches the fixpoint
  std::vector<int> elems;
  for (const ShortArc& a : t.arcs) elems.push_back(a.element);
  std::map<int, int> pos;
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);

  UnionFind uf(static_cast<int>(elems.size()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const ShortArc& a : t.arcs) {
      for (size_t i = 1; i < a.solutions.size(); ++i) {
        auto it_y0 = pos.find(a.solutions[0].first), it_y = pos.find(a.solutions[i].first);
        auto it_z0 = pos.find(a.solutions[0].second), it_z = pos.find(a.solutions[i].second);
        if (it_y0 != pos.end() && it_y != pos.end())
          changed = uf.unite(it_y0->second, it_y->second) || changed;
        if (it_z0 != pos.end() && it_z != pos.end())
          changed = uf.unite(it_z0->second, it_z->second) || changed;
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (size_t i = 0; i < elems.size(); ++i) classes[uf.find(static_cast<int>(i))].push_back(elems[i]);
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : classes) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string GOutput::report_text() const {
  std::string s = accepted ? "accepted" : "rejected";
  s += "; rounds=" + std::to_string(rounds);
  s += "; h-classes=" + std::to_string(h_classes.size());
  if (!issues.ok()) s += "\n" + issues.summary();
  return s;
}

GOutput functor_g(const ToppModel& m) {
  GOutput out;
  out.issues = validate_topp_model(m);
  if (!out.issues.ok()) return out;

  ShortArcTable table = short_arcs(m);
  if (!table.ok()) {
    out.issues = table.issues;
    return out;
  }
  const Groupoid& g = m.p;

  // the a-subgroupoid as a groupoid of its own
  const std::vector<int> a = m.a_elements();
  std::vector<int> a_pos(g.n_elements(), -1);
  for (size_t i = 0; i < a.size(); ++i) a_pos[a[i]] = static_cast<int>(i);
  std::vector<int> objs;  // touched objects
  std::vector<int> o_pos(g.n_objects(), -1);
  for (int e : a) {
    for (int o : {g.src[e], g.tgt[e]})
      if (o_pos[o] < 0) {
        o_pos[o] = static_cast<int>(objs.size());
        objs.push_back(o);
      }
  }
  Groupoid sub;
  for (int o : objs) sub.objects.push_back(g.objects[o]);
  for (int e : a) {
    sub.elements.push_back(g.elements[e]);
    sub.src.push_back(o_pos[g.src[e]]);
    sub.tgt.push_back(o_pos[g.tgt[e]]);
    sub.inv.push_back(a_pos[g.inv[e]]);
  }
  sub.unit.resize(objs.size());
  for (size_t i = 0; i < objs.size(); ++i) sub.unit[i] = a_pos[g.unit[objs[i]]];
  sub.comp.assign(a.size(), std::vector<int>(a.size(), -1));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (sub.tgt[i] == sub.src[j]) sub.comp[i][j] = a_pos[g.comp[a[i]][a[j]]];

  // arcs in sub-element numbering
  std::vector<int> arc_sub;  // table position -> sub element
  std::vector<int> arc_at(a.size(), -1);
  for (size_t i = 0; i < table.arcs.size(); ++i) {
    int se = a_pos[table.arcs[i].element];
    arc_sub.push_back(se);
    arc_at[se] = static_cast<int>(i);
  }

  // minimal equivalence on arcs (per-arc witness constraints), then the
  // congruence quotient; congruence merges of inequivalent arcs feed the
  // constraint collection again, per class, until stable
  UnionFind sim(static_cast<int>(a.size()));
  auto gather_per_class = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::vector<int>> cls;  // rep -> table positions
      for (int se : arc_sub) cls[sim.find(se)].push_back(arc_at[se]);
      for (auto& [rep, members] : cls) {
        int y0 = -1, z0 = -1;
        for (int t : members)
          for (auto [y, z] : table.arcs[t].solutions) {
            int ys = a_pos[y], zs = a_pos[z];
            if (y0 < 0) y0 = ys;
            else changed = sim.unite(y0, ys) || changed;
            if (z0 < 0) z0 = zs;
            else changed = sim.unite(z0, zs) || changed;
          }
      }
    }
  };
  gather_per_class();

  QuotientResult q;
  for (;;) {
    std::vector<std::pair<int, int>> pairs;
    for (int se : arc_sub) {
      int rep = sim.find(se);
      if (rep != se) pairs.emplace_back(rep, se);
    }
    q = quotient_by_congruence(sub, pairs);
    bool new_merge = false;
    for (size_t i = 0; i < arc_sub.size(); ++i)
      for (size_t j = i + 1; j < arc_sub.size(); ++j)
        if (q.class_of[arc_sub[i]] == q.class_of[arc_sub[j]] &&
            !sim.same(arc_sub[i], arc_sub[j])) {
          sim.unite(arc_sub[i], arc_sub[j]);
          new_merge = true;
        }
    if (!new_merge) break;
    ++out.rounds;
    gather_per_class();
  }

  // at the fixpoint the arc partition embeds into the quotient
  for (size_t i = 0; i < arc_sub.size(); ++i)
    for (size_t j = i + 1; j < arc_sub.size(); ++j) {
      bool in_quotient = q.class_of[arc_sub[i]] == q.class_of[arc_sub[j]];
      bool in_sim = sim.same(arc_sub[i], arc_sub[j]);
      if (in_quotient != in_sim)
        out.issues.add_axiom("h-embedding", "arc classes collapse beyond the minimal equivalence");
    }

  // k on quotient classes, from the recorded witnesses
  std::map<int, int> k_cls;  // quotient element -> quotient element
  for (size_t t = 0; t < table.arcs.size(); ++t) {
    int cx = q.class_of[arc_sub[t]];
    for (auto [y, z] : table.arcs[t].solutions) {
      int cz = q.class_of[a_pos[z]];
      auto [it, fresh] = k_cls.try_emplace(cx, cz);
      if (!fresh && it->second != cz)
        out.issues.add_axiom("k-not-well-defined",
                             "class of " + g.elements[table.arcs[t].element] +
                                 " has witnesses in distinct classes");
    }
  }
  if (!out.issues.ok()) {
    out.issues.canonicalize();
    return out;
  }

  // involution and the inversion identities ki = ik and k(y) = i(z)
  const Groupoid& Q = q.quotient;
  for (auto [cx, cz] : k_cls) {
    auto back = k_cls.find(cz);
    if (back == k_cls.end() || back->second != cx)
      out.issues.add_axiom("k-not-involutive", Q.elements[cx]);
  }
  for (size_t t = 0; t < table.arcs.size(); ++t) {
    const ShortArc& arc = table.arcs[t];
    int cx = q.class_of[arc_sub[t]];
    for (auto [y, z] : arc.solutions) {
      int cy = q.class_of[a_pos[y]], cz = q.class_of[a_pos[z]];
      if (k_cls.at(cx) != cz)
        out.issues.add_axiom("k-assignment", g.elements[arc.element]);
      int c_ix = q.class_of[a_pos[g.inv[arc.element]]];
      auto k_ix = k_cls.find(c_ix);
      if (k_ix == k_cls.end() || k_ix->second != Q.inv[cy])
        out.issues.add_axiom("ki-ix-identity", g.elements[arc.element]);
      auto k_y = k_cls.find(cy);
      if (k_y == k_cls.end() || k_y->second != Q.inv[cz])
        out.issues.add_axiom("ky-iz-identity", g.elements[arc.element]);
      // the defining equation, re-verified verbatim in p
      int lhs = g.comp[g.comp[arc.alpha][arc.element]][arc.beta];
      int rhs = g.comp[g.comp[y][arc.gamma]][z];
      if (lhs != rhs) out.issues.add_axiom("eq2-broken", g.elements[arc.element]);
    }
  }
  if (!out.issues.ok()) {
    out.issues.canonicalize();
    return out;
  }

  std::vector<int> h;
  std::vector<std::pair<int, int>> kp;
  for (auto [cx, cz] : k_cls) {
    h.push_back(cx);
    kp.emplace_back(cx, cz);
  }
  DeltaGroupoid delta = make_delta(Q, h, kp);

  ValidationReport dv = validate_delta(delta);
  if (!dv.ok()) {
    out.issues.merge(dv);
    out.issues.canonicalize();
    return out;
  }
  if (!check_iki_kik(delta)) {
    out.issues.add_axiom("iki-kik", "derived identity fails on the quotient");
    return out;
  }

  out.accepted = true;
  out.delta = std::move(delta);
  out.projection = std::move(q.projection);
  out.h_classes = std::move(h);
  return out;
}

ToppModel simply_connected_model(int n) {
  if (n < 1) throw PreconditionError("simply_connected_model: n must be >= 1");
  std::vector<std::string> pts;
  auto pix = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pts.push_back("q" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  ToppModel m;
  m.p = pair_groupoid(pts);
  const int np = n * n;
  m.in_a.assign(np * np, 0);
  m.in_l.assign(np * np, 0);
  auto eix = [np](int u, int v) { return u * np + v; };
  for (int u = 0; u < np; ++u)
    for (int v = 0; v < np; ++v)
      if (u / n == v / n) m.in_a[eix(u, v)] = 1;  // same component
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.in_l[eix(pix(i, j), pix(j, i))] = 1;
  return m;
}

ToppModel model_with_empty_a(const Groupoid& p) {
  ToppModel m;
  m.p = p;
  m.in_a.assign(p.n_elements(), 0);
  m.in_l.assign(p.n_elements(), 0);
  return m;
}

ToppModel model_full_a(const Groupoid& p) {
  ToppModel m;
  m.p = p;
  m.in_a.assign(p.n_elements(), 1);
  m.in_l.assign(p.n_elements(), 0);
  return m;
}

ToppModel transport_model(const ToppModel& m, const Relabel& rl) {
  const Groupoid& g = m.p;
  const int no = g.n_objects();
  if (static_cast<int>(rl.object_image.size()) != no ||
      static_cast<int>(rl.lambda.size()) != no)
    throw PreconditionError("transport_model: relabel tables must cover all objects");
  std::vector<char> seen(no, 0);
  for (int v = 0; v < no; ++v) {
    int w = rl.object_image[v];
    if (w < 0 || w >= no || seen[w])
      throw PreconditionError("transport_model: object_image is not a bijection");
    seen[w] = 1;
    int lam = rl.lambda[v];
    if (lam < 0 || lam >= g.n_elements() || !m.in_a[lam])
      throw PreconditionError("transport_model: lambda for " + g.objects[v] +
                              " is not an a_sub element");
    if (g.src[lam] != v || g.tgt[lam] != w)
      throw PreconditionError("transport_model: lambda for " + g.objects[v] +
                              " has wrong endpoints");
  }
  ToppModel out = m;
  out.in_l.assign(g.n_elements(), 0);
  for (int e = 0; e < g.n_elements(); ++e) {
    if (!m.in_l[e]) continue;
    // f(gamma) = inv(lambda[src]) gamma lambda[tgt]
    int f = g.comp[g.comp[g.inv[rl.lambda[g.src[e]]]][e]][rl.lambda[g.tgt[e]]];
    out.in_l[f] = 1;
  }
  return out;
}

bool delta_independence_check(const ToppModel& m, const Relabel& rl, int iso_cap) {
  GOutput g1 = functor_g(m);
  GOutput g2 = functor_g(transport_model(m, rl));
  if (!g1.accepted || !g2.accepted) return false;
  return find_isomorphism(g1.delta, g2.delta, iso_cap).status == IsoStatus::found;
}

}  // namespace dgk
