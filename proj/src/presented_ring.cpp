#include "dgk/presented_ring.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace dgk {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

LinComb normalized(LinComb c) {
  std::map<Word, BigInt, bool (*)(const Word&, const Word&)> acc(word_less);
  for (auto& t : c) {
    auto [it, fresh] = acc.try_emplace(std::move(t.word), t.coef);
    if (!fresh) it->second += t.coef;
  }
  LinComb out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) out.push_back({it->second, it->first});
  return out;
}

LinComb lc_word(Word w, BigInt coef) {
  if (coef.is_zero()) return {};
  return {{std::move(coef), std::move(w)}};
}

LinComb lc_int(long long v) { return lc_word({}, BigInt(v)); }

LinComb lc_add(const LinComb& a, const LinComb& b) {
  LinComb c = a;
  c.insert(c.end(), b.begin(), b.end());
  return normalized(std::move(c));
}

LinComb lc_neg(LinComb a) {
  for (auto& t : a) t.coef = -t.coef;
  return a;
}

LinComb lc_sub(const LinComb& a, const LinComb& b) { return lc_add(a, lc_neg(b)); }

LinComb lc_scale(const LinComb& a, const BigInt& c) {
  if (c.is_zero()) return {};
  LinComb out = a;
  for (auto& t : out) t.coef *= c;
  return out;
}

LinComb lc_mul(const LinComb& a, const LinComb& b) {
  LinComb out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b) {
      Word w = ta.word;
      w.insert(w.end(), tb.word.begin(), tb.word.end());
      out.push_back({ta.coef * tb.coef, std::move(w)});
    }
  return normalized(std::move(out));
}

bool lc_mentions(const LinComb& c, int gen) {
  for (const auto& t : c)
    for (int letter : t.word)
      if (letter == gen) return true;
  return false;
}

int PresentedRing::generator_index(const std::string& id) const {
  for (int i = 0; i < n_generators(); ++i)
    if (generators[i].id == id) return i;
  return -1;
}

std::vector<std::pair<int, int>> inverse_pair_layout(const PresentedRing& p) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < p.n_generators(); ++g) {
    if (!p.generators[g].invertible) continue;
    int j = p.generators[g].inverse;
    if (j == g) {
      out.emplace_back(g, g);
    } else if (g < j) {
      out.emplace_back(g, j);
      out.emplace_back(j, g);
    }
  }
  return out;
}

std::vector<LinComb> PresentedRing::inverse_relations() const {
  std::vector<LinComb> out;
  for (auto [a, b] : inverse_pair_layout(*this))
    out.push_back(lc_sub(lc_word({a, b}), lc_int(1)));
  return out;
}

std::vector<LinComb> PresentedRing::all_relations() const {
  std::vector<LinComb> out = relations;
  auto inv = inverse_relations();
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

PresentedRing PresentedRing::zero() {
  PresentedRing p;
  p.relations.push_back(lc_int(1));
  return p;
}

bool PresentedRing::is_zero_presentation() const {
  return generators.empty() && relations.size() == 1 && relations[0] == lc_int(1);
}

LinComb evaluate(const LinComb& c, const std::vector<LinComb>& images) {
  LinComb out;
  for (const auto& t : c) {
    LinComb prod = lc_int(1);
    for (int letter : t.word) prod = lc_mul(prod, images.at(letter));
    prod = lc_scale(prod, t.coef);
    out.insert(out.end(), prod.begin(), prod.end());
  }
  return normalized(std::move(out));
}

CertCheck check_certificate(const RingHomCertificate& c) {
  const auto src_rels = c.source.all_relations();
  const auto tgt_rels = c.target.all_relations();
  if (static_cast<int>(c.images.size()) != c.source.n_generators())
    return {false, -1, -1, "image count does not match source generators"};
  for (const auto& im : c.images)
    for (const auto& t : im)
      for (int letter : t.word)
        if (letter < 0 || letter >= c.target.n_generators())
          return {false, -1, -1, "image mentions unknown target generator"};
  if (c.traces.size() != src_rels.size())
    return {false, -1, -1, "trace count does not match source relations"};

  for (size_t s = 0; s < src_rels.size(); ++s) {
    LinComb cur = evaluate(src_rels[s], c.images);
    for (size_t q = 0; q < c.traces[s].size(); ++q) {
      const TraceStep& st = c.traces[s][q];
      if (st.rel < 0 || st.rel >= static_cast<int>(tgt_rels.size()))
        return {false, static_cast<int>(s), static_cast<int>(q), "step cites unknown relation"};
      for (int letter : st.left)
        if (letter < 0 || letter >= c.target.n_generators())
          return {false, static_cast<int>(s), static_cast<int>(q), "bad context word"};
      for (int letter : st.right)
        if (letter < 0 || letter >= c.target.n_generators())
          return {false, static_cast<int>(s), static_cast<int>(q), "bad context word"};
      LinComb sub = lc_scale(lc_mul(lc_mul(lc_word(st.left), tgt_rels[st.rel]), lc_word(st.right)),
                             st.mult);
      cur = lc_sub(cur, sub);
    }
    if (!cur.empty())
      return {false, static_cast<int>(s), -1, "relation image does not reduce to zero"};
  }
  return {true, -1, -1, ""};
}

RingHomCertificate identity_certificate(const PresentedRing& p) {
  RingHomCertificate c;
  c.source = p;
  c.target = p;
  for (int g = 0; g < p.n_generators(); ++g) c.images.push_back(lc_word({g}));
  const size_t nrel = p.all_relations().size();
  for (size_t s = 0; s < nrel; ++s)
    c.traces.push_back({TraceStep{static_cast<int>(s), 1, {}, {}}});
  return c;
}

namespace {

std::vector<TraceStep> compress_steps(std::vector<TraceStep> steps) {
  std::sort(steps.begin(), steps.end(), [](const TraceStep& a, const TraceStep& b) {
    return std::tie(a.rel, a.left, a.right) < std::tie(b.rel, b.left, b.right);
  });
  std::vector<TraceStep> out;
  for (auto& st : steps) {
    if (!out.empty() && out.back().rel == st.rel && out.back().left == st.left &&
        out.back().right == st.right) {
      out.back().mult += st.mult;
    } else {
      out.push_back(std::move(st));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const TraceStep& st) { return st.mult.is_zero(); }),
            out.end());
  return out;
}

}  // namespace

RingHomCertificate compose(const RingHomCertificate& first, const RingHomCertificate& then) {
  if (!(first.target == then.source))
    throw PreconditionError("compose: certificate endpoints do not match");
  RingHomCertificate out;
  out.source = first.source;
  out.target = then.target;
  for (const auto& im : first.images) out.images.push_back(evaluate(im, then.images));

  auto eval_word = [&](const Word& w) {
    LinComb acc = lc_int(1);
    for (int letter : w) acc = lc_mul(acc, then.images.at(letter));
    return acc;
  };

  for (const auto& trace : first.traces) {
    std::vector<TraceStep> steps;
    for (const auto& st : trace) {
      LinComb a_comb = eval_word(st.left);
      LinComb b_comb = eval_word(st.right);
      for (const auto& st2 : then.traces.at(st.rel))
        for (const auto& ta : a_comb)
          for (const auto& tb : b_comb) {
            Word l = ta.word;
            l.insert(l.end(), st2.left.begin(), st2.left.end());
            Word r = st2.right;
            r.insert(r.end(), tb.word.begin(), tb.word.end());
            steps.push_back({st2.rel, st.mult * st2.mult * ta.coef * tb.coef, std::move(l),
                             std::move(r)});
          }
    }
    out.traces.push_back(compress_steps(std::move(steps)));
  }
  return out;
}

PresentedRing universal_ring(const DeltaGroupoid& d) {
  if (d.g.is_empty()) return PresentedRing::zero();
  const Groupoid& g = d.g;
  PresentedRing p;
  for (int e = 0; e < g.n_elements(); ++e)
    p.generators.push_back({g.elements[e], true, g.inv[e]});
  for (int o = 0; o < g.n_objects(); ++o)
    p.relations.push_back(lc_sub(lc_word({g.unit[o]}), lc_int(1)));
  for (int x = 0; x < g.n_elements(); ++x)
    for (int y = 0; y < g.n_elements(); ++y) {
      int z = g.comp[x][y];
      if (z >= 0) p.relations.push_back(lc_sub(lc_word({x, y}), lc_word({z})));
    }
  for (int x : d.h)
    if (x <= d.k[x])  // one relation per k-orbit; the other is identical
      p.relations.push_back(
          lc_sub(lc_add(lc_word({d.k[x]}), lc_word({x})), lc_int(1)));
  return p;
}

PresentedRing presentation_z() { return {}; }

PresentedRing presentation_zfree(const std::vector<std::string>& gens) {
  PresentedRing p;
  for (const auto& s : gens) {
    int i = p.n_generators();
    p.generators.push_back({s, true, i + 1});
    p.generators.push_back({s + "^-1", true, i});
  }
  return p;
}

PresentedRing presentation_localized_zfree(const std::vector<std::string>& gens,
                                           const LinComb& w) {
  PresentedRing p = presentation_zfree(gens);
  int t = p.n_generators();
  p.generators.push_back({"t", false, -1});
  p.relations.push_back(lc_sub(lc_mul(lc_word({t}), w), lc_int(1)));
  p.relations.push_back(lc_sub(lc_mul(w, lc_word({t})), lc_int(1)));
  return p;
}

PresentedRing parse_presentation_spec(const std::string& spec) {
  auto freenames = [](int k) {
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
    return names;
  };
  if (spec == "z") return presentation_z();
  if (spec == "localized-zfree4") return parse_presentation_spec("localized-zfree:4");
  if (spec.rfind("zfree:", 0) == 0) {
    int k;
    try {
      k = std::stoi(spec.substr(6));
    } catch (...) {
      throw ParseError("bad presentation spec '" + spec + "'");
    }
    if (k < 0) throw ParseError("bad presentation spec '" + spec + "'");
    return presentation_zfree(freenames(k));
  }
  if (spec.rfind("localized-zfree:", 0) == 0) {
    int k;
    try {
      k = std::stoi(spec.substr(16));
    } catch (...) {
      throw ParseError("bad presentation spec '" + spec + "'");
    }
    if (k < 1) throw ParseError("bad presentation spec '" + spec + "': needs x0");
    // localize at x0 - 1; x0 sits at generator index 0
    return presentation_localized_zfree(freenames(k), lc_sub(lc_word({0}), lc_int(1)));
  }
  throw ParseError("unknown presentation spec '" + spec + "'");
}

}  // namespace dgk
