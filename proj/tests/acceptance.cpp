// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Stated runtime bounds are enforced, not advisory.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "dgk/constructions.hpp"
#include "dgk/hom_enum.hpp"
#include "dgk/json_io.hpp"
#include "dgk/presented_ring.hpp"
#include "dgk/topo_model.hpp"

using namespace dgk;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

bool g_all_pass = true;

void run_criterion(int id, const std::string& name, double time_limit_s,
                   const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit_s > 0 && secs > time_limit_s) {
    out.pass = false;
    out.note += " [time limit " + std::to_string(time_limit_s) + "s exceeded]";
  }
  std::ostringstream line;
  line << (out.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): "
       << (out.note.empty() ? (out.pass ? "ok" : "failed") : out.note);
  line << " [" << std::fixed;
  line.precision(2);
  line << secs << "s]";
  std::cout << line.str() << std::endl;
  g_all_pass = g_all_pass && out.pass;
}

// S3 with left-to-right composition, same fixture as the unit tests
Groupoid s3_groupoid() {
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

std::vector<Groupoid> groupoid_corpus() {
  return {pair_groupoid({"1"}),
          pair_groupoid({"1", "2", "3"}),
          pair_groupoid({"1", "2", "3", "4", "5"}),
          disjoint_union({pair_groupoid({"a", "b"}), cyclic_group_groupoid(3)}),
          cyclic_group_groupoid(4),
          cyclic_group_groupoid(6),
          s3_groupoid(),
          x3_delta(3).g};
}

DeltaGroupoid s3_factorized_fixture() {
  Groupoid s3 = s3_groupoid();
  return factorized_delta({s3, {s3.element_index("e"), s3.element_index("(12)")},
                           s3.element_index("(13)")});
}

std::vector<DeltaGroupoid> criterion1_structures() {
  std::vector<DeltaGroupoid> out;
  for (int n = 1; n <= 5; ++n) out.push_back(x3_delta(n));
  for (int n = 2; n <= 13; ++n) out.push_back(ring_unit_delta(zmod(n)));
  for (int n = 2; n <= 7; ++n) out.push_back(affine_delta(zmod(n)));
  out.push_back(s3_factorized_fixture());
  for (const Groupoid& g : groupoid_corpus()) out.push_back(trivial_delta(g));
  return out;
}

long long count_h_composable(const DeltaGroupoid& d) {
  long long count = 0;
  for (int x : d.h)
    for (int y : d.h)
      if (d.g.composable(x, y) && d.in_h(d.g.comp[x][y])) ++count;
  return count;
}

bool signatures_match(const std::vector<SignatureRow>& a, const std::vector<SignatureRow>& b) {
  return a == b;
}

}  // namespace

int main() {
  // 1. axiom suite over the whole structure corpus
  run_criterion(1, "axiom suite", 10.0, [] {
    Outcome out;
    long long pairs = 0;
    const auto structures = criterion1_structures();
    for (const DeltaGroupoid& d : structures) {
      if (!validate_groupoid(d.g).ok()) return Outcome{false, "underlying groupoid invalid"};
      if (!validate_delta(d).ok()) return Outcome{false, "validate_delta failed"};
      pairs += count_h_composable(d);
    }
    out.pass = true;
    out.note = std::to_string(structures.size()) + " structures, " + std::to_string(pairs) +
               " H-composable pairs enumerated";
    return out;
  });

  // 2. derived identity + mutation sensitivity
  run_criterion(2, "iki = kik and k-mutation detection", 30.0, [] {
    for (const DeltaGroupoid& d : criterion1_structures()) {
      if (!check_iki_kik(d)) return Outcome{false, "iki = kik failed on a validated structure"};
      if (d.h_size() == 0) continue;
      DeltaGroupoid broken = d;
      int a = broken.h.front();
      if (broken.k[a] == a) {
        // self-fixed value: move it off h or onto another h element
        int other = -1;
        for (int e = 0; e < broken.g.n_elements() && other < 0; ++e)
          if (!broken.in_h(e)) other = e;
        if (other < 0) other = (broken.h.size() > 1) ? broken.h[1] : a;
        if (other == a) continue;  // nothing to corrupt with
        broken.k[a] = other;
      } else {
        broken.k[a] = a;
      }
      if (validate_delta(broken).ok())
        return Outcome{false, "corrupted k escaped the validator"};
    }
    return Outcome{true, "every corrupted structure reported at least one violation"};
  });

  // 3. canonical embeddings are delta morphisms
  run_criterion(3, "canonical embedding morphisms", 30.0, [] {
    for (int n = 2; n <= 13; ++n)
      if (!is_delta_morphism(canonical_embedding(zmod(n))))
        return Outcome{false, "canonical embedding fails at zmod:" + std::to_string(n)};
    return Outcome{true, "x -> (x, 1-x) is a delta morphism for zmod 2..13"};
  });

  // 4. the pipeline reproduces the x3 family and the degenerate families
  run_criterion(4, "functor end-to-end", 60.0, [] {
    for (int n = 1; n <= 4; ++n) {
      GOutput out = functor_g(simply_connected_model(n));
      if (!out.accepted) return Outcome{false, "model rejected at n=" + std::to_string(n)};
      if (find_isomorphism(out.delta, x3_delta(n)).status != IsoStatus::found)
        return Outcome{false, "no isomorphism with x3 at n=" + std::to_string(n)};
    }
    GOutput empty = functor_g(model_with_empty_a(pair_groupoid({"a", "b"})));
    if (!empty.accepted || !empty.delta.g.is_empty())
      return Outcome{false, "(X, empty) family is not the empty delta"};
    Groupoid c4 = cyclic_group_groupoid(4);
    GOutput full = functor_g(model_full_a(c4));
    if (!full.accepted || full.delta.h_size() != 0 ||
        find_isomorphism(full.delta, trivial_delta(c4)).status != IsoStatus::found)
      return Outcome{false, "(X, X) family over C4 is not (C4, empty)"};
    return Outcome{true, "g(model(n)) = x3(n) for n = 1..4; degenerate families check"};
  });

  // 5. accepted models must always yield valid output, rejections must cite why
  run_criterion(5, "random model dichotomy", 60.0, [] {
    std::mt19937 rng(574219);
    int accepted = 0, rejected = 0;
    for (int trial = 0; trial < 120; ++trial) {
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
      if (!validate_topp_model(m).ok())
        return Outcome{false, "generator produced an invalid model"};
      GOutput out = functor_g(m);
      if (out.accepted) {
        ++accepted;
        if (!validate_delta(out.delta).ok())
          return Outcome{false, "accepted model produced an invalid delta"};
        if (!check_iki_kik(out.delta))
          return Outcome{false, "accepted model breaks iki = kik"};
      } else {
        ++rejected;
        if (out.issues.ok()) return Outcome{false, "rejection without a cited violation"};
      }
    }
    return Outcome{true, std::to_string(accepted) + " accepted / " + std::to_string(rejected) +
                             " rejected, no accepted-invalid instance"};
  });

  // 6. the ring identifications of the example families
  run_criterion(6, "universal ring identifications", 300.0, [] {
    auto corpus = default_ring_corpus();
    EnumOptions opts;
    opts.budget = 400000000ULL;  // the mat:2 corpus entry needs headroom
    opts.jobs = 4;

    GOutput g1 = functor_g(simply_connected_model(1));
    GOutput g2 = functor_g(simply_connected_model(2));
    GOutput g3 = functor_g(simply_connected_model(3));
    if (!g1.accepted || !g2.accepted || !g3.accepted)
      return Outcome{false, "pipeline rejected a simply connected model"};

    // (a) n = 1: the integers
    if (!signatures_match(hom_signature(universal_ring(g1.delta), corpus, opts),
                          hom_signature(presentation_z(), corpus, opts)))
      return Outcome{false, "n=1 signature differs from Z"};

    // (b) n = 2: the free ring on two invertible generators (raw presentation)
    if (!signatures_match(hom_signature(universal_ring(g2.delta), corpus, opts),
                          hom_signature(presentation_zfree({"x0", "x1"}), corpus, opts)))
      return Outcome{false, "n=2 signature differs from ZFree(x0,x1)"};

    // (c) n = 3: the localization of ZFree(x0..x3) at x0 - 1; the raw
    // presentation exceeds any tuple budget, so the certified simplification
    // stands in for it (criterion 8 checks signature preservation)
    PresentedRing p3 = universal_ring(g3.delta);
    SimplifyResult s3 = simplify(p3);
    if (!check_certificate(s3.forward).ok || !check_certificate(s3.backward).ok)
      return Outcome{false, "n=3 simplification certificates failed"};
    auto sig3 = hom_signature(s3.simplified, corpus, opts);
    auto sigL = hom_signature(parse_presentation_spec("localized-zfree4"), corpus, opts);
    if (!signatures_match(sig3, sigL))
      return Outcome{false, "n=3 signature differs from the localization"};
    long long into_z3 = -1, into_z3_loc = -1;
    for (const auto& row : sig3)
      if (row.ring == "zmod:3") into_z3 = row.count;
    for (const auto& row : sigL)
      if (row.ring == "zmod:3") into_z3_loc = row.count;
    if (into_z3 != 8 || into_z3_loc != 8)
      return Outcome{false, "count into zmod:3 is not 8 on both sides"};
    return Outcome{true, "signatures agree for n = 1, 2, 3; count into zmod:3 = 8 on both sides"};
  });

  // 7. universal property bijections
  run_criterion(7, "universal property", 120.0, [] {
    std::vector<DeltaGroupoid> ds = {trivial_delta(cyclic_group_groupoid(2)),
                                     ring_unit_delta(zmod(3)), ring_unit_delta(zmod(5)),
                                     x3_delta(3)};
    EnumOptions opts;
    opts.budget = 100000000ULL;
    for (const DeltaGroupoid& d : ds)
      for (int n : {2, 3, 5})
        if (!universal_property_check(d, zmod(n), opts))
          return Outcome{false, "bijection fails into zmod:" + std::to_string(n)};
    return Outcome{true, "morphism sets equal hom sets for all 12 pairs"};
  });

  // 8. certificates: checkable, mutation-fragile, signature-preserving
  run_criterion(8, "simplification certificates", 300.0, [] {
    GOutput g3 = functor_g(simply_connected_model(3));
    if (!g3.accepted) return Outcome{false, "pipeline rejected model(3)"};
    std::vector<PresentedRing> inputs = {
        universal_ring(trivial_delta(cyclic_group_groupoid(2))),
        universal_ring(ring_unit_delta(zmod(3))),
        universal_ring(ring_unit_delta(zmod(5))),
        universal_ring(x3_delta(2)),
        universal_ring(x3_delta(3)),
        universal_ring(g3.delta),
    };
    auto corpus = default_ring_corpus();
    std::vector<FiniteRing> small_corpus = {zmod(2), zmod(3)};
    EnumOptions opts;
    opts.budget = 400000000ULL;
    opts.jobs = 4;
    int mutations = 0;
    for (size_t i = 0; i < inputs.size(); ++i) {
      SimplifyResult s = simplify(inputs[i]);
      if (!check_certificate(s.forward).ok || !check_certificate(s.backward).ok)
        return Outcome{false, "emitted certificate failed"};
      for (const RingHomCertificate* cert : {&s.forward, &s.backward})
        for (size_t t = 0; t < cert->traces.size(); ++t)
          for (size_t q = 0; q < cert->traces[t].size(); ++q) {
            RingHomCertificate mutated = *cert;
            mutated.traces[t].erase(mutated.traces[t].begin() + q);
            if (check_certificate(mutated).ok)
              return Outcome{false, "single-step deletion went unnoticed"};
            ++mutations;
          }
      // signature preservation: full corpus where the raw tuple space fits
      // the budget, a small exact corpus for the large presentations
      const bool raw_feasible = i < 4;
      const auto& rings = raw_feasible ? corpus : small_corpus;
      if (!signatures_match(hom_signature(inputs[i], rings, opts),
                            hom_signature(s.simplified, rings, opts)))
        return Outcome{false, "simplify changed a hom-count signature"};
    }
    return Outcome{true, std::to_string(mutations) + " single-step mutations all rejected; "
                         "signatures preserved on all 6 corpus inputs"};
  });

  // 9. independence of the endpoint structure
  run_criterion(9, "endpoint relabeling independence", 120.0, [] {
    ToppModel m = simply_connected_model(3);
    const Groupoid& p = m.p;
    const int n = 3;
    auto opix = [&](int i, int j) { return i * n + j; };
    auto identity = [&] {
      Relabel rl;
      for (int v = 0; v < p.n_objects(); ++v) {
        rl.object_image.push_back(v);
        rl.lambda.push_back(p.unit[v]);
      }
      return rl;
    };
    auto swap_in_component = [&](int comp, int j1, int j2) {
      Relabel rl = identity();
      int u = opix(comp, j1), w = opix(comp, j2);
      rl.object_image[u] = w;
      rl.object_image[w] = u;
      rl.lambda[u] = p.element_index("(" + p.objects[u] + "," + p.objects[w] + ")");
      rl.lambda[w] = p.element_index("(" + p.objects[w] + "," + p.objects[u] + ")");
      return rl;
    };
    std::vector<Relabel> fixtures;
    fixtures.push_back(identity());
    fixtures.push_back(swap_in_component(0, 1, 2));
    fixtures.push_back(swap_in_component(1, 0, 2));
    fixtures.push_back(swap_in_component(2, 0, 1));
    {  // 3-cycle inside component 0
      Relabel rl = identity();
      int a = opix(0, 0), b = opix(0, 1), c = opix(0, 2);
      rl.object_image[a] = b;
      rl.object_image[b] = c;
      rl.object_image[c] = a;
      rl.lambda[a] = p.element_index("(" + p.objects[a] + "," + p.objects[b] + ")");
      rl.lambda[b] = p.element_index("(" + p.objects[b] + "," + p.objects[c] + ")");
      rl.lambda[c] = p.element_index("(" + p.objects[c] + "," + p.objects[a] + ")");
      fixtures.push_back(rl);
    }
    {  // simultaneous swaps in two components
      Relabel rl = swap_in_component(0, 0, 1);
      int u = opix(2, 1), w = opix(2, 2);
      rl.object_image[u] = w;
      rl.object_image[w] = u;
      rl.lambda[u] = p.element_index("(" + p.objects[u] + "," + p.objects[w] + ")");
      rl.lambda[w] = p.element_index("(" + p.objects[w] + "," + p.objects[u] + ")");
      fixtures.push_back(rl);
    }
    for (size_t i = 0; i < fixtures.size(); ++i)
      if (!delta_independence_check(m, fixtures[i]))
        return Outcome{false, "relabeling fixture " + std::to_string(i) + " broke independence"};
    return Outcome{true, std::to_string(fixtures.size()) + " relabelings, all outputs isomorphic"};
  });

  std::cout << (g_all_pass ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
            << std::endl;
  return g_all_pass ? 0 : 1;
}
