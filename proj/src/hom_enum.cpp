#include "dgk/hom_enum.hpp"

#include <algorithm>
#include <thread>

#include "dgk/constructions.hpp"

namespace dgk {

namespace {

// coef * x in r, with the exact coefficient reduced mod |r| first
int scalar_mul(const FiniteRing& r, const BigInt& coef, int x) {
  std::uint32_t c = coef.mod_u32(static_cast<std::uint32_t>(r.size()));
  int acc = r.zero;
  for (std::uint32_t i = 0; i < c; ++i) acc = r.add[acc][x];
  return acc;
}

int eval_word_in_ring(const FiniteRing& r, const Word& w, const std::vector<int>& images) {
  int acc = r.one;
  for (int letter : w) acc = r.mul[acc][images[letter]];
  return acc;
}

int eval_comb_in_ring(const FiniteRing& r, const LinComb& c, const std::vector<int>& images) {
  int acc = r.zero;
  for (const Term& t : c)
    acc = r.add[acc][scalar_mul(r, t.coef, eval_word_in_ring(r, t.word, images))];
  return acc;
}

bool relations_hold(const FiniteRing& r, const std::vector<LinComb>& rels,
                    const std::vector<int>& images) {
  for (const LinComb& rel : rels)
    if (eval_comb_in_ring(r, rel, images) != r.zero) return false;
  return true;
}

struct Slot {
  int gen;                  // generator decided by this slot
  std::vector<int> domain;  // candidate ring elements, ascending
  int forced_partner = -1;  // generator whose image is the ring inverse
};

std::vector<Slot> slot_layout(const PresentedRing& p, const FiniteRing& r, const UnitGroup& u) {
  std::vector<Slot> slots;
  std::vector<int> all(r.size());
  for (int i = 0; i < r.size(); ++i) all[i] = i;
  for (int g = 0; g < p.n_generators(); ++g) {
    const RingGenerator& rg = p.generators[g];
    if (!rg.invertible) {
      slots.push_back({g, all, -1});
    } else if (rg.inverse == g) {
      slots.push_back({g, u.units, -1});
    } else if (g < rg.inverse) {
      slots.push_back({g, u.units, rg.inverse});
    }  // the higher partner is forced
  }
  return slots;
}

}  // namespace

std::vector<std::vector<int>> enumerate_ring_homs(const PresentedRing& p, const FiniteRing& r,
                                                  const EnumOptions& opts) {
  const UnitGroup u = units(r);
  const std::vector<Slot> slots = slot_layout(p, r, u);
  const std::vector<LinComb> rels = p.all_relations();

  unsigned long long total = 1;
  for (const Slot& s : slots) {
    if (s.domain.empty()) return {};
    const unsigned long long d = s.domain.size();
    total = (total > ~0ULL / d) ? ~0ULL : total * d;  // saturate on overflow
  }
  if (total > opts.budget)
    throw BudgetError("enumerate_ring_homs: " + std::to_string(total) +
                          " candidate tuples exceed budget " + std::to_string(opts.budget),
                      total);

  auto run_block = [&](unsigned long long lo, unsigned long long hi,
                       std::vector<std::vector<int>>& out) {
    std::vector<int> digits(slots.size(), 0);
    for (unsigned long long ix = lo; ix < hi; ++ix) {
      unsigned long long v = ix;
      for (size_t j = slots.size(); j-- > 0;) {
        digits[j] = static_cast<int>(v % slots[j].domain.size());
        v /= slots[j].domain.size();
      }
      std::vector<int> images(p.n_generators(), -1);
      for (size_t j = 0; j < slots.size(); ++j) {
        int val = slots[j].domain[digits[j]];
        images[slots[j].gen] = val;
        if (slots[j].forced_partner >= 0)
          images[slots[j].forced_partner] = u.inverse_of[val];
      }
      if (relations_hold(r, rels, images)) out.push_back(std::move(images));
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 1024) {
    std::vector<std::vector<int>> out;
    run_block(0, total, out);
    return out;
  }
  std::vector<std::vector<std::vector<int>>> parts(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    unsigned long long lo = total * w / jobs, hi = total * (w + 1) / jobs;
    workers.emplace_back(run_block, lo, hi, std::ref(parts[w]));
  }
  for (auto& t : workers) t.join();
  std::vector<std::vector<int>> out;
  for (auto& part : parts)
    for (auto& a : part) out.push_back(std::move(a));
  return out;
}

std::vector<std::vector<int>> enumerate_ring_homs_by_propagation(const PresentedRing& p,
                                                                 const FiniteRing& r,
                                                                 const EnumOptions& opts) {
  const UnitGroup u = units(r);
  const std::vector<LinComb> rels = p.all_relations();
  const int ng = p.n_generators();

  // generators mentioned per relation
  std::vector<std::vector<int>> mentions(rels.size());
  for (size_t i = 0; i < rels.size(); ++i) {
    std::vector<int>& m = mentions[i];
    for (const Term& t : rels[i])
      for (int letter : t.word) m.push_back(letter);
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }

  std::vector<int> images(ng, -1);
  std::vector<std::vector<int>> found;
  unsigned long long nodes = 0;

  std::vector<int> all_elements(r.size());
  for (int i = 0; i < r.size(); ++i) all_elements[i] = i;
  auto domain_of = [&](int g) -> const std::vector<int>& {
    return p.generators[g].invertible ? u.units : all_elements;
  };

  // Unique-completion propagation: a relation with one unknown generator
  // either pins it (exactly one candidate works) or kills the branch.
  // Returns false on contradiction; records forced assignments in `trail`.
  auto propagate = [&](std::vector<int>& trail) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < rels.size(); ++i) {
        int unknown = -1, n_unknown = 0;
        for (int g : mentions[i])
          if (images[g] < 0) {
            unknown = g;
            ++n_unknown;
            if (n_unknown > 1) break;
          }
        if (n_unknown == 0) {
          if (eval_comb_in_ring(r, rels[i], images) != r.zero) return false;
        } else if (n_unknown == 1) {
          int hit = -1, hits = 0;
          for (int v : domain_of(unknown)) {
            images[unknown] = v;
            if (eval_comb_in_ring(r, rels[i], images) == r.zero) {
              hit = v;
              if (++hits > 1) break;
            }
          }
          images[unknown] = -1;
          if (hits == 0) return false;
          if (hits == 1) {
            images[unknown] = hit;
            trail.push_back(unknown);
            changed = true;
          }
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self) -> void {
    if (++nodes > opts.budget)
      throw BudgetError("enumerate_ring_homs_by_propagation: search exceeds budget", nodes);
    int g = -1;
    for (int i = 0; i < ng; ++i)
      if (images[i] < 0) {
        g = i;
        break;
      }
    if (g < 0) {
      if (relations_hold(r, rels, images)) found.push_back(images);
      return;
    }
    for (int v : domain_of(g)) {
      images[g] = v;
      std::vector<int> trail;
      if (propagate(trail)) self(self);
      for (int t : trail) images[t] = -1;
      images[g] = -1;
    }
  };
  search(search);
  std::sort(found.begin(), found.end());
  return found;
}

long long count_ring_homs(const PresentedRing& p, const FiniteRing& r, const EnumOptions& opts) {
  return static_cast<long long>(enumerate_ring_homs(p, r, opts).size());
}

std::vector<SignatureRow> hom_signature(const PresentedRing& p,
                                        const std::vector<FiniteRing>& corpus,
                                        const EnumOptions& opts) {
  std::vector<SignatureRow> out;
  for (const FiniteRing& r : corpus)
    out.push_back({r.name, count_ring_homs(p, r, opts)});
  return out;
}

std::vector<std::vector<int>> enumerate_unit_morphisms(const DeltaGroupoid& d,
                                                       const FiniteRing& r,
                                                       const EnumOptions& opts) {
  const Groupoid& g = d.g;
  const UnitGroup u = units(r);
  const int n = g.n_elements();
  const int one_ix = r.one;

  std::vector<int> val(n, -1);
  std::vector<std::vector<int>> found;
  unsigned long long nodes = 0;

  // assign with closure under inverse, k-affinity, and two-of-three on
  // composition triples; false on contradiction
  auto assign = [&](int e0, int v0, std::vector<int>& trail) -> bool {
    std::vector<std::pair<int, int>> queue{{e0, v0}};
    while (!queue.empty()) {
      auto [e, v] = queue.back();
      queue.pop_back();
      if (val[e] >= 0) {
        if (val[e] != v) return false;
        continue;
      }
      if (!u.is_unit(v)) return false;
      val[e] = v;
      trail.push_back(e);

      queue.emplace_back(g.inv[e], u.inverse_of[v]);
      if (d.in_h(e)) {
        int w = r.sub(r.one, v);  // s(k(x)) = 1 - s(x)
        queue.emplace_back(d.k[e], w);
      }
      for (int y = 0; y < n; ++y) {
        if (g.composable(e, y)) {
          int z = g.comp[e][y];
          if (val[y] >= 0) queue.emplace_back(z, r.mul[v][val[y]]);
          else if (val[z] >= 0) queue.emplace_back(y, r.mul[u.inverse_of[v]][val[z]]);
        }
        if (g.composable(y, e)) {
          int z = g.comp[y][e];
          if (val[y] >= 0) queue.emplace_back(z, r.mul[val[y]][v]);
          else if (val[z] >= 0) queue.emplace_back(y, r.mul[val[z]][u.inverse_of[v]]);
        }
      }
    }
    return true;
  };

  auto undo = [&](const std::vector<int>& trail) {
    for (int e : trail) val[e] = -1;
  };

  auto search = [&](auto&& self) -> void {
    if (++nodes > opts.budget)
      throw BudgetError("enumerate_unit_morphisms: search exceeds budget", nodes);
    int e = -1;
    for (int i = 0; i < n; ++i)
      if (val[i] < 0) {
        e = i;
        break;
      }
    if (e < 0) {
      found.push_back(val);
      return;
    }
    for (int uv : u.units) {
      std::vector<int> trail;
      if (assign(e, uv, trail)) self(self);
      undo(trail);
    }
  };

  // all groupoid units map to 1 before any decision
  std::vector<int> base_trail;
  bool ok = true;
  for (int o = 0; o < g.n_objects() && ok; ++o) ok = assign(g.unit[o], one_ix, base_trail);
  if (ok) search(search);
  std::sort(found.begin(), found.end());
  return found;
}

bool universal_property_check(const DeltaGroupoid& d, const FiniteRing& r,
                              const EnumOptions& opts) {
  // side A: Delta-groupoid morphisms into the canonical Delta-group on R*
  std::vector<std::vector<int>> morphisms = enumerate_unit_morphisms(d, r, opts);

  // each one must really be a Delta-morphism (independent validator)
  const DeltaGroupoid rud = ring_unit_delta(r);
  const UnitGroup u = units(r);
  std::vector<int> unit_pos(r.size(), -1);
  for (int i = 0; i < u.size(); ++i) unit_pos[u.units[i]] = i;
  for (const auto& a : morphisms) {
    DeltaMorphism f{d, rud, std::vector<int>(d.g.n_objects(), 0), {}};
    for (int e = 0; e < d.g.n_elements(); ++e) {
      if (unit_pos[a[e]] < 0) return false;
      f.element_map.push_back(unit_pos[a[e]]);
    }
    if (!is_delta_morphism(f)) return false;
  }

  // side B: ring homs out of the universal ring, from the relations alone
  const PresentedRing p = universal_ring(d);
  std::vector<std::vector<int>> homs = enumerate_ring_homs_by_propagation(p, r, opts);

  // existence + uniqueness: a hom is determined by its generator images, so
  // the bijection s <-> f with s = f o h is image-set equality
  for (const auto& a : morphisms)
    if (!relations_hold(r, p.all_relations(), a)) return false;

  return morphisms == homs;
}

}  // namespace dgk
