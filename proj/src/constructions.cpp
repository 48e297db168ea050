#include "dgk/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dgk {

DeltaGroupoid x3_delta(int n) {
  if (n < 1) throw PreconditionError("x3_delta: n must be >= 1");
  Groupoid g;
  auto letter = [](int a) { return std::to_string(a + 1); };
  // objects (a,b): the b-th point of the a-th summand
  auto oix = [n](int a, int b) { return a * n + b; };
  auto eix = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.objects.push_back("(" + letter(a) + "," + letter(b) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        g.elements.push_back("(" + letter(a) + "," + letter(b) + "," + letter(c) + ")");
        g.src.push_back(oix(a, b));
        g.tgt.push_back(oix(a, c));
        g.inv.push_back(eix(a, c, b));
      }
  g.unit.resize(g.n_objects());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.unit[oix(a, b)] = eix(a, b, b);
  g.comp.assign(g.n_elements(), std::vector<int>(g.n_elements(), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) g.comp[eix(a, b, c)][eix(a, c, e)] = eix(a, b, e);

  std::vector<int> h;
  std::vector<std::pair<int, int>> kp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && c != a) {
          h.push_back(eix(a, b, c));
          kp.emplace_back(eix(a, b, c), eix(c, b, a));
        }
  return make_delta(std::move(g), std::move(h), kp);
}

DeltaGroupoid ring_unit_delta(const FiniteRing& r) {
  UnitGroup u = units(r);
  const int n = u.size();
  std::vector<std::string> names;
  for (int x : u.units) names.push_back(r.names[x]);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[u.units[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = pos.at(r.mul[u.units[i]][u.units[j]]);
  Groupoid g = group_groupoid("*", names, mul, pos.at(r.one));

  std::vector<int> h;
  std::vector<std::pair<int, int>> kp;
  for (int i = 0; i < n; ++i) {
    int x = u.units[i];
    int one_minus = r.sub(r.one, x);
    if (u.is_unit(one_minus)) {
      h.push_back(i);
      kp.emplace_back(i, pos.at(one_minus));
    }
  }
  return make_delta(std::move(g), std::move(h), kp);
}

DeltaGroupoid affine_delta(const FiniteRing& r) {
  UnitGroup u = units(r);
  const int nu = u.size(), nr = r.size();
  const int n = nu * nr;
  auto ix = [nr](int ui, int y) { return ui * nr + y; };
  std::vector<std::string> names;
  std::map<int, int> upos;
  for (int i = 0; i < nu; ++i) upos[u.units[i]] = i;
  for (int i = 0; i < nu; ++i)
    for (int y = 0; y < nr; ++y)
      names.push_back("(" + r.names[u.units[i]] + "," + r.names[y] + ")");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < nu; ++i)
    for (int y = 0; y < nr; ++y)
      for (int j = 0; j < nu; ++j)
        for (int v = 0; v < nr; ++v) {
          int x = u.units[i], uu = u.units[j];
          // (x,y)(u,v) = (xu, xv + y)
          mul[ix(i, y)][ix(j, v)] = ix(upos.at(r.mul[x][uu]), r.add[r.mul[x][v]][y]);
        }
  Groupoid g = group_groupoid("*", names, mul, ix(upos.at(r.one), r.zero));

  std::vector<int> h;
  std::vector<std::pair<int, int>> kp;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      // h = R* x R*; k swaps coordinates
      h.push_back(ix(i, u.units[j]));
      kp.emplace_back(ix(i, u.units[j]), ix(j, u.units[i]));
    }
  return make_delta(std::move(g), std::move(h), kp);
}

DeltaMorphism canonical_embedding(const FiniteRing& r) {
  DeltaGroupoid dom = ring_unit_delta(r);
  DeltaGroupoid cod = affine_delta(r);
  UnitGroup u = units(r);
  std::vector<int> emap;
  for (int i = 0; i < u.size(); ++i) {
    int x = u.units[i];
    int fx = cod.g.element_index("(" + r.names[x] + "," + r.names[r.sub(r.one, x)] + ")");
    emap.push_back(fx);
  }
  return {std::move(dom), std::move(cod), {0}, std::move(emap)};
}

DeltaGroupoid factorized_delta(const FactorizedGroupData& fd) {
  const Groupoid& G = fd.group;
  if (G.n_objects() != 1)
    throw PreconditionError("factorized_delta: group must be a one-object groupoid");
  const int n = G.n_elements();
  const int e = G.unit[0];
  auto mul = [&](int a, int b) { return G.comp[a][b]; };
  auto inv = [&](int a) { return G.inv[a]; };

  if (fd.theta < 0 || fd.theta >= n)
    throw PreconditionError("factorized_delta: theta out of range");
  if (mul(fd.theta, fd.theta) != e)
    throw PreconditionError("factorized_delta: theta is not involutive (theta^2 = " +
                            G.elements[mul(fd.theta, fd.theta)] + ")");

  std::set<int> gp(fd.g_plus.begin(), fd.g_plus.end());
  if (!gp.count(e)) throw PreconditionError("factorized_delta: G+ does not contain the unit");
  for (int a : gp) {
    if (a < 0 || a >= n) throw PreconditionError("factorized_delta: G+ index out of range");
    if (!gp.count(inv(a)))
      throw PreconditionError("factorized_delta: G+ not closed under inverse at " + G.elements[a]);
    for (int b : gp)
      if (!gp.count(mul(a, b)))
        throw PreconditionError("factorized_delta: G+ not closed under product at " +
                                G.elements[a] + "*" + G.elements[b]);
  }

  std::set<int> gm;
  for (int a : gp) gm.insert(mul(mul(fd.theta, a), fd.theta));

  // factorization map on G+G-: product -> (plus, minus); injectivity required
  std::map<int, std::pair<int, int>> fact;
  for (int a : gp)
    for (int b : gm) {
      int ab = mul(a, b);
      auto it = fact.find(ab);
      if (it != fact.end() && it->second != std::make_pair(a, b))
        throw PreconditionError(
            "factorized_delta: multiplication map not injective: " + G.elements[ab] + " = " +
            G.elements[it->second.first] + "*" + G.elements[it->second.second] + " = " +
            G.elements[a] + "*" + G.elements[b]);
      fact[ab] = {a, b};
    }

  // h = G+ n G-G+theta n thetaG+G-  (triple products as set products)
  std::set<int> s1, s2;
  for (int b : gm)
    for (int a : gp) {
      s1.insert(mul(mul(b, a), fd.theta));
      s2.insert(mul(mul(fd.theta, a), b));
    }
  std::vector<int> h_parent;
  for (int a : gp)
    if (s1.count(a) && s2.count(a)) h_parent.push_back(a);

  // G+ as a one-object groupoid of its own
  std::vector<int> plus_sorted(gp.begin(), gp.end());
  std::map<int, int> pos;
  for (size_t i = 0; i < plus_sorted.size(); ++i) pos[plus_sorted[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  for (int a : plus_sorted) names.push_back(G.elements[a]);
  std::vector<std::vector<int>> pm(plus_sorted.size(), std::vector<int>(plus_sorted.size()));
  for (size_t i = 0; i < plus_sorted.size(); ++i)
    for (size_t j = 0; j < plus_sorted.size(); ++j)
      pm[i][j] = pos.at(mul(plus_sorted[i], plus_sorted[j]));
  Groupoid gplus = group_groupoid("*", names, pm, pos.at(e));

  std::vector<int> h;
  std::vector<std::pair<int, int>> kp;
  for (int x : h_parent) {
    int tx = mul(fd.theta, inv(x));
    auto it = fact.find(tx);
    if (it == fact.end())
      throw PreconditionError("factorized_delta: theta*x^-1 not in G+G- for x = " + G.elements[x]);
    int kx = inv(it->second.first);  // ((theta x^-1)_+)^-1
    if (!gp.count(kx))
      throw PreconditionError("factorized_delta: k(x) leaves G+ for x = " + G.elements[x]);
    h.push_back(pos.at(x));
    kp.emplace_back(pos.at(x), pos.at(kx));
  }
  return make_delta(std::move(gplus), std::move(h), kp);
}

}  // namespace dgk
