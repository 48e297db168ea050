#include "dgk/json_io.hpp"

#include <map>

namespace dgk {

namespace {

[[noreturn]] void fail(const std::string& what, ValidationReport rep = {}) {
  if (rep.issues.empty()) rep.add_structural("schema", what);
  throw ParseError(what, std::move(rep));
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json groupoid_to_json(const Groupoid& g) {
  Json j;
  j["objects"] = g.objects;
  Json elems = Json::array();
  for (int e = 0; e < g.n_elements(); ++e) {
    Json je;
    je["id"] = g.elements[e];
    je["src"] = g.objects[g.src[e]];
    je["tgt"] = g.objects[g.tgt[e]];
    je["inv"] = g.elements[g.inv[e]];
    elems.push_back(std::move(je));
  }
  j["elements"] = std::move(elems);
  Json units = Json::object();
  for (int o = 0; o < g.n_objects(); ++o) units[g.objects[o]] = g.elements[g.unit[o]];
  j["units"] = std::move(units);
  Json comp = Json::array();
  for (int x = 0; x < g.n_elements(); ++x)
    for (int y = 0; y < g.n_elements(); ++y)
      if (g.comp[x][y] >= 0)
        comp.push_back(Json::array({g.elements[x], g.elements[y], g.elements[g.comp[x][y]]}));
  j["comp"] = std::move(comp);
  return j;
}

Groupoid groupoid_from_json(const Json& j) {
  ValidationReport rep;
  Groupoid g;
  std::map<std::string, int> oix, eix;

  for (const Json& jo : need(j, "objects")) {
    std::string id = need_string(jo, "object id");
    if (!oix.emplace(id, g.n_objects()).second)
      rep.add_structural("duplicate-object", id);
    else
      g.objects.push_back(id);
  }
  const Json& elems = need(j, "elements");
  for (const Json& je : elems) {
    std::string id = need_string(need(je, "id"), "element id");
    if (!eix.emplace(id, g.n_elements()).second) {
      rep.add_structural("duplicate-element", id);
      continue;
    }
    g.elements.push_back(id);
  }
  auto obj_of = [&](const std::string& id, const std::string& ctx) {
    auto it = oix.find(id);
    if (it == oix.end()) {
      rep.add_structural("dangling-object", ctx + " -> " + id);
      return -1;
    }
    return it->second;
  };
  auto elem_of = [&](const std::string& id, const std::string& ctx) {
    auto it = eix.find(id);
    if (it == eix.end()) {
      rep.add_structural("dangling-element", ctx + " -> " + id);
      return -1;
    }
    return it->second;
  };
  for (const Json& je : elems) {
    std::string id = need_string(need(je, "id"), "element id");
    g.src.push_back(obj_of(need_string(need(je, "src"), "src"), id));
    g.tgt.push_back(obj_of(need_string(need(je, "tgt"), "tgt"), id));
    g.inv.push_back(elem_of(need_string(need(je, "inv"), "inv"), id));
  }
  g.unit.assign(g.n_objects(), -1);
  for (const auto& [obj, elem] : need(j, "units").items()) {
    int o = obj_of(obj, "units");
    int e = elem_of(need_string(elem, "unit element"), "units");
    if (o >= 0 && e >= 0) g.unit[o] = e;
  }
  for (int o = 0; o < g.n_objects(); ++o)
    if (g.unit[o] < 0) rep.add_structural("missing-unit", g.objects[o]);
  g.comp.assign(g.n_elements(), std::vector<int>(g.n_elements(), -1));
  for (const Json& triple : need(j, "comp")) {
    if (!triple.is_array() || triple.size() != 3) {
      rep.add_structural("comp-entry", "each comp entry must be [x, y, xy]");
      continue;
    }
    int x = elem_of(need_string(triple[0], "comp"), "comp");
    int y = elem_of(need_string(triple[1], "comp"), "comp");
    int z = elem_of(need_string(triple[2], "comp"), "comp");
    if (x >= 0 && y >= 0 && z >= 0) g.comp[x][y] = z;
  }
  if (!rep.ok()) {
    rep.canonicalize();
    fail("groupoid document has structural errors", std::move(rep));
  }
  return g;
}

Json delta_to_json(const DeltaGroupoid& d) {
  Json j = groupoid_to_json(d.g);
  Json h = Json::array();
  for (int e : d.h) h.push_back(d.g.elements[e]);
  j["h"] = std::move(h);
  Json k = Json::array();
  for (int e : d.h) k.push_back(Json::array({d.g.elements[e], d.g.elements[d.k[e]]}));
  j["k"] = std::move(k);
  return j;
}

DeltaGroupoid delta_from_json(const Json& j) {
  Groupoid g = groupoid_from_json(j);
  ValidationReport rep;
  std::vector<int> h;
  for (const Json& je : need(j, "h")) {
    int e = g.element_index(need_string(je, "h element"));
    if (e < 0) rep.add_structural("dangling-element", "h -> " + je.get<std::string>());
    else h.push_back(e);
  }
  std::vector<std::pair<int, int>> kp;
  for (const Json& pair : need(j, "k")) {
    if (!pair.is_array() || pair.size() != 2) {
      rep.add_structural("k-entry", "each k entry must be [x, k(x)]");
      continue;
    }
    int x = g.element_index(need_string(pair[0], "k"));
    int kx = g.element_index(need_string(pair[1], "k"));
    if (x < 0 || kx < 0)
      rep.add_structural("dangling-element", "k entry");
    else
      kp.emplace_back(x, kx);
  }
  if (!rep.ok()) {
    rep.canonicalize();
    fail("delta document has structural errors", std::move(rep));
  }
  try {
    return make_delta(std::move(g), std::move(h), kp);
  } catch (const PreconditionError& e) {
    fail(e.what());
  }
}

Json model_to_json(const ToppModel& m) {
  Json j = groupoid_to_json(m.p);
  Json a = Json::array(), l = Json::array();
  for (int e = 0; e < m.p.n_elements(); ++e) {
    if (m.in_a[e]) a.push_back(m.p.elements[e]);
    if (m.in_l[e]) l.push_back(m.p.elements[e]);
  }
  j["a_sub"] = std::move(a);
  j["long_arcs"] = std::move(l);
  return j;
}

ToppModel model_from_json(const Json& j) {
  ToppModel m;
  m.p = groupoid_from_json(j);
  m.in_a.assign(m.p.n_elements(), 0);
  m.in_l.assign(m.p.n_elements(), 0);
  ValidationReport rep;
  for (const Json& je : need(j, "a_sub")) {
    int e = m.p.element_index(need_string(je, "a_sub element"));
    if (e < 0) rep.add_structural("dangling-element", "a_sub");
    else m.in_a[e] = 1;
  }
  for (const Json& je : need(j, "long_arcs")) {
    int e = m.p.element_index(need_string(je, "long arc"));
    if (e < 0) rep.add_structural("dangling-element", "long_arcs");
    else m.in_l[e] = 1;
  }
  if (!rep.ok()) {
    rep.canonicalize();
    fail("model document has structural errors", std::move(rep));
  }
  return m;
}

namespace {

Json coef_to_json(const BigInt& c) {
  if (c.fits_i64()) return Json(c.as_i64());
  return Json(c.str());
}

BigInt coef_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt::parse(j.get<std::string>());
  fail("coefficient must be an integer or a decimal string");
}

Json comb_to_json(const LinComb& c, const PresentedRing& p) {
  Json out = Json::array();
  for (const Term& t : c) {
    Json word = Json::array();
    for (int letter : t.word) word.push_back(p.generators[letter].id);
    out.push_back(Json::array({coef_to_json(t.coef), std::move(word)}));
  }
  return out;
}

LinComb comb_from_json(const Json& j, const PresentedRing& p) {
  LinComb out;
  for (const Json& jt : j) {
    if (!jt.is_array() || jt.size() != 2) fail("relation term must be [coef, word]");
    Term t;
    t.coef = coef_from_json(jt[0]);
    for (const Json& letter : jt[1]) {
      int g = p.generator_index(need_string(letter, "word letter"));
      if (g < 0) fail("word mentions undeclared generator '" + letter.get<std::string>() + "'");
      t.word.push_back(g);
    }
    out.push_back(std::move(t));
  }
  return normalized(std::move(out));
}

Word word_from_json(const Json& j, const PresentedRing& p) {
  Word w;
  for (const Json& letter : j) {
    int g = p.generator_index(need_string(letter, "word letter"));
    if (g < 0) fail("word mentions undeclared generator");
    w.push_back(g);
  }
  return w;
}

Json word_to_json(const Word& w, const PresentedRing& p) {
  Json out = Json::array();
  for (int letter : w) out.push_back(p.generators[letter].id);
  return out;
}

}  // namespace

Json presentation_to_json(const PresentedRing& p) {
  Json j;
  Json gens = Json::array();
  for (const RingGenerator& g : p.generators) {
    Json jg;
    jg["id"] = g.id;
    jg["invertible"] = g.invertible;
    if (g.invertible) jg["inverse"] = p.generators[g.inverse].id;
    gens.push_back(std::move(jg));
  }
  j["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const LinComb& r : p.relations) rels.push_back(comb_to_json(r, p));
  j["relations"] = std::move(rels);
  return j;
}

PresentedRing presentation_from_json(const Json& j) {
  PresentedRing p;
  for (const Json& jg : need(j, "generators")) {
    RingGenerator g;
    g.id = need_string(need(jg, "id"), "generator id");
    if (jg.contains("invertible")) g.invertible = jg.at("invertible").get<bool>();
    p.generators.push_back(std::move(g));
  }
  // resolve inverse partners after all ids are known
  int i = 0;
  for (const Json& jg : need(j, "generators")) {
    if (p.generators[i].invertible) {
      if (!jg.contains("inverse")) fail("invertible generator without 'inverse'");
      int partner = p.generator_index(need_string(jg.at("inverse"), "inverse id"));
      if (partner < 0) fail("inverse cites undeclared generator");
      p.generators[i].inverse = partner;
    }
    ++i;
  }
  for (int g = 0; g < p.n_generators(); ++g) {
    if (!p.generators[g].invertible) continue;
    int partner = p.generators[g].inverse;
    if (!p.generators[partner].invertible || p.generators[partner].inverse != g)
      fail("invertible flags must be symmetric between partners");
  }
  for (const Json& jr : need(j, "relations")) p.relations.push_back(comb_from_json(jr, p));
  return p;
}

Json certificate_to_json(const RingHomCertificate& c) {
  Json j;
  j["source"] = presentation_to_json(c.source);
  j["target"] = presentation_to_json(c.target);
  Json images = Json::array();
  for (const LinComb& im : c.images) images.push_back(comb_to_json(im, c.target));
  j["images"] = std::move(images);
  Json traces = Json::array();
  for (const auto& trace : c.traces) {
    Json jt = Json::array();
    for (const TraceStep& st : trace) {
      Json js;
      js["rel"] = st.rel;
      js["mult"] = coef_to_json(st.mult);
      js["left"] = word_to_json(st.left, c.target);
      js["right"] = word_to_json(st.right, c.target);
      jt.push_back(std::move(js));
    }
    traces.push_back(std::move(jt));
  }
  j["traces"] = std::move(traces);
  return j;
}

RingHomCertificate certificate_from_json(const Json& j) {
  RingHomCertificate c;
  c.source = presentation_from_json(need(j, "source"));
  c.target = presentation_from_json(need(j, "target"));
  for (const Json& im : need(j, "images")) c.images.push_back(comb_from_json(im, c.target));
  for (const Json& jt : need(j, "traces")) {
    std::vector<TraceStep> trace;
    for (const Json& js : jt) {
      TraceStep st;
      st.rel = need(js, "rel").get<int>();
      st.mult = coef_from_json(need(js, "mult"));
      st.left = word_from_json(need(js, "left"), c.target);
      st.right = word_from_json(need(js, "right"), c.target);
      trace.push_back(std::move(st));
    }
    c.traces.push_back(std::move(trace));
  }
  return c;
}

Json ring_to_json(const FiniteRing& r) {
  Json j;
  j["elements"] = r.names;
  j["add"] = r.add;
  j["mul"] = r.mul;
  j["zero"] = r.names[r.zero];
  j["one"] = r.names[r.one];
  return j;
}

FiniteRing ring_from_json(const Json& j) {
  FiniteRing r;
  r.name = "table-ring";
  for (const Json& je : need(j, "elements")) r.names.push_back(need_string(je, "ring element"));
  const int n = r.size();
  auto table = [&](const char* key) {
    std::vector<std::vector<int>> t;
    for (const Json& row : need(j, key)) {
      std::vector<int> out;
      for (const Json& v : row) {
        int x = v.get<int>();
        if (x < 0 || x >= n) fail(std::string(key) + " entry out of range");
        out.push_back(x);
      }
      if (static_cast<int>(out.size()) != n) fail(std::string(key) + " row size mismatch");
      t.push_back(std::move(out));
    }
    if (static_cast<int>(t.size()) != n) fail(std::string(key) + " row count mismatch");
    return t;
  };
  r.add = table("add");
  r.mul = table("mul");
  if (j.contains("zero")) r.zero = r.element_index(need_string(j.at("zero"), "zero"));
  if (j.contains("one")) r.one = r.element_index(need_string(j.at("one"), "one"));
  if (r.zero < 0) {  // infer: the unique additive identity
    for (int z = 0; z < n && r.zero < 0; ++z) {
      bool ok = true;
      for (int x = 0; x < n; ++x) ok = ok && r.add[x][z] == x;
      if (ok) r.zero = z;
    }
  }
  if (r.one < 0) {
    for (int e = 0; e < n && r.one < 0; ++e) {
      bool ok = true;
      for (int x = 0; x < n; ++x) ok = ok && r.mul[x][e] == x && r.mul[e][x] == x;
      if (ok) r.one = e;
    }
  }
  if (r.zero < 0 || r.one < 0) fail("ring document has no additive or multiplicative identity");
  return r;
}

Json delta_morphism_to_json(const DeltaMorphism& f) {
  Json j;
  j["domain"] = delta_to_json(f.domain);
  j["codomain"] = delta_to_json(f.codomain);
  Json om = Json::object(), em = Json::object();
  for (size_t o = 0; o < f.object_map.size(); ++o)
    om[f.domain.g.objects[o]] = f.codomain.g.objects[f.object_map[o]];
  for (size_t e = 0; e < f.element_map.size(); ++e)
    em[f.domain.g.elements[e]] = f.codomain.g.elements[f.element_map[e]];
  j["object_map"] = std::move(om);
  j["element_map"] = std::move(em);
  return j;
}

DeltaMorphism delta_morphism_from_json(const Json& j) {
  DeltaMorphism f;
  f.domain = delta_from_json(need(j, "domain"));
  f.codomain = delta_from_json(need(j, "codomain"));
  f.object_map.assign(f.domain.g.n_objects(), -1);
  f.element_map.assign(f.domain.g.n_elements(), -1);
  ValidationReport rep;
  for (const auto& [from, to] : need(j, "object_map").items()) {
    int o = f.domain.g.object_index(from);
    int o2 = f.codomain.g.object_index(need_string(to, "object image"));
    if (o < 0 || o2 < 0) rep.add_structural("dangling-object", from);
    else f.object_map[o] = o2;
  }
  for (const auto& [from, to] : need(j, "element_map").items()) {
    int e = f.domain.g.element_index(from);
    int e2 = f.codomain.g.element_index(need_string(to, "element image"));
    if (e < 0 || e2 < 0) rep.add_structural("dangling-element", from);
    else f.element_map[e] = e2;
  }
  for (int o = 0; o < f.domain.g.n_objects(); ++o)
    if (f.object_map[o] < 0) rep.add_structural("missing-object-image", f.domain.g.objects[o]);
  for (int e = 0; e < f.domain.g.n_elements(); ++e)
    if (f.element_map[e] < 0) rep.add_structural("missing-element-image", f.domain.g.elements[e]);
  if (!rep.ok()) {
    rep.canonicalize();
    fail("morphism document has structural errors", std::move(rep));
  }
  return f;
}

Json factorized_to_json(const FactorizedGroupData& fd) {
  Json j;
  j["group"] = groupoid_to_json(fd.group);
  Json gp = Json::array();
  for (int e : fd.g_plus) gp.push_back(fd.group.elements[e]);
  j["g_plus"] = std::move(gp);
  j["theta"] = fd.group.elements[fd.theta];
  return j;
}

FactorizedGroupData factorized_from_json(const Json& j) {
  FactorizedGroupData fd;
  fd.group = groupoid_from_json(need(j, "group"));
  ValidationReport rep;
  for (const Json& je : need(j, "g_plus")) {
    int e = fd.group.element_index(need_string(je, "g_plus element"));
    if (e < 0) rep.add_structural("dangling-element", "g_plus");
    else fd.g_plus.push_back(e);
  }
  fd.theta = fd.group.element_index(need_string(need(j, "theta"), "theta"));
  if (fd.theta < 0) rep.add_structural("dangling-element", "theta");
  if (!rep.ok()) {
    rep.canonicalize();
    fail("factorized-group document has structural errors", std::move(rep));
  }
  return fd;
}

Json report_to_json(const ValidationReport& rep) {
  Json j = Json::array();
  for (const ValidationIssue& i : rep.issues) {
    Json ji;
    ji["kind"] = i.kind == ValidationIssue::Kind::structural ? "structural" : "axiom";
    ji["code"] = i.code;
    ji["detail"] = i.detail;
    j.push_back(std::move(ji));
  }
  return j;
}

}  // namespace dgk
