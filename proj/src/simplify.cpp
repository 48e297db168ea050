#include <algorithm>
#include <map>
#include <optional>

#include "dgk/presented_ring.hpp"

namespace dgk {

namespace {

constexpr int kReductionStepBound = 10000;

struct MoveCerts {
  PresentedRing next;
  RingHomCertificate fwd, bwd;
};

// all_relations index of the implicit relation for the ordered pair (a,b)
std::map<std::pair<int, int>, int> implicit_index_map(const PresentedRing& p) {
  std::map<std::pair<int, int>, int> out;
  auto layout = inverse_pair_layout(p);
  for (size_t i = 0; i < layout.size(); ++i)
    out[layout[i]] = static_cast<int>(p.relations.size() + i);
  return out;
}

// One oriented rewrite rule: occurrences of the leading word are removed by
// subtracting a context multiple of the relation.  Only +-1 leading
// coefficients orient.
struct Rule {
  int rel;  // index into the reducing presentation's all_relations()
  const LinComb* comb;
};

// Bounded reduction of `c` by the rules, degree-then-lexicographic leading
// word first.  Records the subtraction steps; returns the normal form.
LinComb reduce_by_rules(LinComb c, const std::vector<Rule>& rules,
                        std::vector<TraceStep>* steps) {
  for (int iter = 0; iter < kReductionStepBound && !c.empty(); ++iter) {
    bool applied = false;
    for (const Term& t : c) {
      for (const Rule& rule : rules) {
        const LinComb& s = *rule.comb;
        if (s.empty()) continue;
        const BigInt& c0 = s[0].coef;
        if (!(c0 == BigInt(1) || c0 == BigInt(-1))) continue;
        const Word& w0 = s[0].word;
        auto pos = std::search(t.word.begin(), t.word.end(), w0.begin(), w0.end());
        if (pos == t.word.end() && !w0.empty()) continue;  // no occurrence
        Word left(t.word.begin(), pos);
        Word right(pos + static_cast<long>(w0.size()), t.word.end());
        BigInt mult = t.coef * c0;
        if (steps) steps->push_back({rule.rel, mult, left, right});
        c = lc_sub(c, lc_scale(lc_mul(lc_mul(lc_word(left), s), lc_word(right)), mult));
        applied = true;
        break;
      }
      if (applied) break;
    }
    if (!applied) break;
  }
  return c;
}

// Drop the first explicit relation that reduces to zero using the other
// relations (explicit and materialized); its reduction steps become the
// forward trace.
std::optional<MoveCerts> drop_redundant_move(const PresentedRing& p) {
  const auto inv_rels = p.inverse_relations();
  const int n_expl = static_cast<int>(p.relations.size());
  const int n_impl = static_cast<int>(inv_rels.size());

  for (int i = 0; i < n_expl; ++i) {
    // rule indices refer to the NEXT presentation's all_relations order:
    // explicit j (j != i) shifted past the gap, implicit after them
    std::vector<Rule> rules;
    for (int j = 0; j < n_expl; ++j) {
      if (j == i) continue;
      rules.push_back({j < i ? j : j - 1, &p.relations[j]});
    }
    for (int q = 0; q < n_impl; ++q) rules.push_back({n_expl - 1 + q, &inv_rels[q]});

    std::vector<TraceStep> steps;
    if (!reduce_by_rules(p.relations[i], rules, &steps).empty()) continue;

    PresentedRing next;
    next.generators = p.generators;
    for (int j = 0; j < n_expl; ++j)
      if (j != i) next.relations.push_back(p.relations[j]);

    RingHomCertificate fwd, bwd;
    fwd.source = p;
    fwd.target = next;
    bwd.source = next;
    bwd.target = p;
    for (int g = 0; g < p.n_generators(); ++g) {
      fwd.images.push_back(lc_word({g}));
      bwd.images.push_back(lc_word({g}));
    }
    for (int j = 0; j < n_expl; ++j) {
      if (j == i) fwd.traces.push_back(steps);
      else fwd.traces.push_back({{j < i ? j : j - 1, 1, {}, {}}});
    }
    for (int q = 0; q < n_impl; ++q) fwd.traces.push_back({{n_expl - 1 + q, 1, {}, {}}});
    for (int j = 0; j < n_expl; ++j)
      if (j != i) bwd.traces.push_back({{j, 1, {}, {}}});
    for (int q = 0; q < n_impl; ++q) bwd.traces.push_back({{n_expl + q, 1, {}, {}}});

    return MoveCerts{std::move(next), std::move(fwd), std::move(bwd)};
  }
  return std::nullopt;
}

struct Elimination {
  int rel;  // explicit relation index
  int gen;
  int eps;  // coefficient sign of the single-letter term
};

// A relation eliminates g when it has a +-1 coefficient single-letter term
// [g] and no other term mentions g.  Generators whose inverse partner is
// already gone are eliminated first, so that breaking a pair is finished
// before another pair is touched.
std::optional<Elimination> find_elimination(const PresentedRing& p) {
  std::optional<Elimination> fallback;
  for (int t = 0; t < static_cast<int>(p.relations.size()); ++t) {
    const LinComb& r = p.relations[t];
    for (size_t q = 0; q < r.size(); ++q) {
      const Term& term = r[q];
      if (term.word.size() != 1) continue;
      if (!(term.coef == BigInt(1) || term.coef == BigInt(-1))) continue;
      int g = term.word[0];
      bool elsewhere = false;
      for (size_t q2 = 0; q2 < r.size() && !elsewhere; ++q2) {
        if (q2 == q) continue;
        for (int letter : r[q2].word) elsewhere = elsewhere || letter == g;
      }
      if (!elsewhere) {
        Elimination e{t, g, term.coef == BigInt(1) ? 1 : -1};
        if (!p.generators[g].invertible) return e;  // orphan: take immediately
        if (!fallback) fallback = e;
      }
    }
  }
  return fallback;
}

MoveCerts apply_elimination(const PresentedRing& p, const Elimination& e) {
  const int ng = p.n_generators();
  const auto impl_p = implicit_index_map(p);

  // replacement: r_t = eps*[g] + rest  =>  g := W = -eps * rest
  LinComb rest;
  for (const Term& t : p.relations[e.rel])
    if (t.word != Word{e.gen}) rest.push_back(t);
  const LinComb W = normalized(lc_scale(rest, BigInt(-e.eps)));

  std::vector<int> newix(ng, -1), oldix;
  for (int i = 0; i < ng; ++i)
    if (i != e.gen) {
      newix[i] = static_cast<int>(oldix.size());
      oldix.push_back(i);
    }
  auto map_comb = [&](const LinComb& c) {
    LinComb out;
    for (const Term& t : c) {
      Word w;
      for (int letter : t.word) w.push_back(newix[letter]);
      out.push_back({t.coef, std::move(w)});
    }
    return normalized(std::move(out));
  };

  PresentedRing next;
  for (int i = 0; i < ng; ++i) {
    if (i == e.gen) continue;
    RingGenerator rg = p.generators[i];
    if (rg.invertible) {
      if (rg.inverse == e.gen) {
        rg.invertible = false;  // partner eliminated; content survives as relations
        rg.inverse = -1;
      } else {
        rg.inverse = newix[rg.inverse];
      }
    }
    next.generators.push_back(rg);
  }

  // substitute g := W with occurrence recording:
  //   input = output + sum mult * left * r_t * right   (all in p's letters)
  struct Sub {
    LinComb out;
    std::vector<TraceStep> occs;
  };
  auto substitute = [&](const LinComb& in) {
    Sub s;
    std::vector<Term> work(in.begin(), in.end());
    LinComb done;
    for (size_t q = 0; q < work.size(); ++q) {
      Term t = work[q];
      auto pos = std::find(t.word.begin(), t.word.end(), e.gen);
      if (pos == t.word.end()) {
        done.push_back(std::move(t));
        continue;
      }
      Word a(t.word.begin(), pos), b(pos + 1, t.word.end());
      s.occs.push_back({e.rel, t.coef * BigInt(e.eps), a, b});
      for (const Term& wt : W) {
        Word nw = a;
        nw.insert(nw.end(), wt.word.begin(), wt.word.end());
        nw.insert(nw.end(), b.begin(), b.end());
        work.push_back({t.coef * wt.coef, std::move(nw)});
      }
    }
    s.out = normalized(std::move(done));
    return s;
  };

  // substituted explicit relations
  std::vector<int> expl_target(p.relations.size(), -1);
  std::vector<std::vector<TraceStep>> expl_occs(p.relations.size());
  for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) {
    if (i == e.rel) continue;
    Sub s = substitute(p.relations[i]);
    expl_occs[i] = std::move(s.occs);
    if (!s.out.empty()) {
      expl_target[i] = static_cast<int>(next.relations.size());
      next.relations.push_back(map_comb(s.out));
    }
  }

  // materialized content of g's inverse relations, if g was invertible
  const int partner = p.generators[e.gen].invertible ? p.generators[e.gen].inverse : -1;
  int mat_gp = -1, mat_pg = -1, mat_gg = -1;  // new explicit indices or -1
  if (partner >= 0 && partner != e.gen) {
    LinComb gp = lc_sub(lc_mul(W, lc_word({partner})), lc_int(1));
    if (!gp.empty()) {
      mat_gp = static_cast<int>(next.relations.size());
      next.relations.push_back(map_comb(gp));
    }
    LinComb pg = lc_sub(lc_mul(lc_word({partner}), W), lc_int(1));
    if (!pg.empty()) {
      mat_pg = static_cast<int>(next.relations.size());
      next.relations.push_back(map_comb(pg));
    }
  } else if (partner == e.gen) {
    LinComb gg = lc_sub(lc_mul(W, W), lc_int(1));
    if (!gg.empty()) {
      mat_gg = static_cast<int>(next.relations.size());
      next.relations.push_back(map_comb(gg));
    }
  }

  const auto impl_next = implicit_index_map(next);
  const auto layout_p = inverse_pair_layout(p);

  RingHomCertificate fwd, bwd;
  fwd.source = p;
  fwd.target = next;
  bwd.source = next;
  bwd.target = p;
  for (int i = 0; i < ng; ++i)
    fwd.images.push_back(i == e.gen ? map_comb(W) : lc_word({newix[i]}));
  for (int j = 0; j < next.n_generators(); ++j) bwd.images.push_back(lc_word({oldix[j]}));

  // forward traces: explicit relations of p
  for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) {
    if (i == e.rel || expl_target[i] < 0) {
      fwd.traces.push_back({});  // image is identically zero
    } else {
      fwd.traces.push_back({{expl_target[i], 1, {}, {}}});
    }
  }
  // forward traces: implicit relations of p, in layout order
  for (auto [a, b] : layout_p) {
    if (a != e.gen && b != e.gen) {
      fwd.traces.push_back({{impl_next.at({newix[a], newix[b]}), 1, {}, {}}});
    } else if (a == e.gen && b != e.gen) {
      fwd.traces.push_back(mat_gp >= 0 ? std::vector<TraceStep>{{mat_gp, 1, {}, {}}}
                                       : std::vector<TraceStep>{});
    } else if (b == e.gen && a != e.gen) {
      fwd.traces.push_back(mat_pg >= 0 ? std::vector<TraceStep>{{mat_pg, 1, {}, {}}}
                                       : std::vector<TraceStep>{});
    } else {  // self-paired
      fwd.traces.push_back(mat_gg >= 0 ? std::vector<TraceStep>{{mat_gg, 1, {}, {}}}
                                       : std::vector<TraceStep>{});
    }
  }

  // backward traces: explicit relations of next
  bwd.traces.assign(next.all_relations().size(), {});
  for (int i = 0; i < static_cast<int>(p.relations.size()); ++i) {
    if (i == e.rel || expl_target[i] < 0) continue;
    std::vector<TraceStep> tr;
    for (const TraceStep& occ : expl_occs[i]) tr.push_back({e.rel, -occ.mult, occ.left, occ.right});
    tr.push_back({i, 1, {}, {}});
    bwd.traces[expl_target[i]] = std::move(tr);
  }
  if (mat_gp >= 0)
    bwd.traces[mat_gp] = {{e.rel, BigInt(-e.eps), {}, {partner}},
                          {impl_p.at({e.gen, partner}), 1, {}, {}}};
  if (mat_pg >= 0)
    bwd.traces[mat_pg] = {{e.rel, BigInt(-e.eps), {partner}, {}},
                          {impl_p.at({partner, e.gen}), 1, {}, {}}};
  if (mat_gg >= 0) {
    std::vector<TraceStep> tr;
    for (const Term& wt : W) tr.push_back({e.rel, BigInt(-e.eps) * wt.coef, {}, wt.word});
    tr.push_back({e.rel, BigInt(-e.eps), {e.gen}, {}});
    tr.push_back({impl_p.at({e.gen, e.gen}), 1, {}, {}});
    bwd.traces[mat_gg] = std::move(tr);
  }
  // backward traces: implicit relations of next (pairs survive with both ends)
  for (auto [a2, b2] : inverse_pair_layout(next))
    bwd.traces[impl_next.at({a2, b2})] = {{impl_p.at({oldix[a2], oldix[b2]}), 1, {}, {}}};

  return MoveCerts{std::move(next), std::move(fwd), std::move(bwd)};
}

}  // namespace

SimplifyResult simplify(const PresentedRing& p) {
  PresentedRing cur = p;
  for (auto& r : cur.relations) r = normalized(r);

  RingHomCertificate fwd = identity_certificate(cur);
  RingHomCertificate bwd = identity_certificate(cur);

  for (;;) {
    if (auto mv = drop_redundant_move(cur)) {
      fwd = compose(fwd, mv->fwd);
      bwd = compose(mv->bwd, bwd);
      cur = std::move(mv->next);
      continue;
    }
    if (auto e = find_elimination(cur)) {
      MoveCerts mv = apply_elimination(cur, *e);
      fwd = compose(fwd, mv.fwd);
      bwd = compose(mv.bwd, bwd);
      cur = std::move(mv.next);
      continue;
    }
    break;
  }
  return {std::move(cur), std::move(fwd), std::move(bwd)};
}

}  // namespace dgk
