// dgk: batch front-end for the delta-groupoid toolkit.
//
// Subcommands exchange JSON result envelopes {"status","data","report"} on
// the standard streams, so runs compose in shell pipelines:
//
//   dgk construct x3 --n 4 | dgk validate delta
//   dgk model simply-connected --n 3 | dgk g-compute | dgk iso-check --against x3:3
//
// Exit codes: 0 success/true, 1 checked-false, 2 structural/input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dgk/hom_enum.hpp"
#include "dgk/json_io.hpp"

namespace {

using dgk::Json;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw dgk::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  Json j = Json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) throw dgk::ParseError("input is not valid JSON");
  // unwrap a result envelope from an upstream command
  if (j.is_object() && j.contains("status") && j.contains("data")) return j.at("data");
  return j;
}

int emit(const std::string& status, Json data, Json report, int code,
         const std::string& out_path = "", const std::string& report_path = "") {
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << data.dump(2) << "\n";
  }
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << (report.is_string() ? report.get<std::string>() : report.dump(2)) << "\n";
  }
  Json envelope;
  envelope["status"] = status;
  envelope["data"] = std::move(data);
  envelope["report"] = std::move(report);
  std::cout << envelope.dump(2) << "\n";
  return code;
}

int emit_error(const std::string& code, const std::string& what, Json report = Json::array()) {
  Json data;
  data["code"] = code;
  data["message"] = what;
  return emit("error", std::move(data), std::move(report), 2);
}

// "x3:N" | "ring-unit:<ring>" | "affine:<ring>" | path to a delta JSON file
dgk::DeltaGroupoid delta_from_spec(const std::string& spec) {
  if (spec.rfind("x3:", 0) == 0) return dgk::x3_delta(std::stoi(spec.substr(3)));
  if (spec.rfind("ring-unit:", 0) == 0)
    return dgk::ring_unit_delta(dgk::parse_ring_spec(spec.substr(10)));
  if (spec.rfind("affine:", 0) == 0)
    return dgk::affine_delta(dgk::parse_ring_spec(spec.substr(7)));
  return dgk::delta_from_json(read_json(spec));
}

dgk::PresentedRing presentation_from_spec(const std::string& spec) {
  try {
    return dgk::parse_presentation_spec(spec);
  } catch (const dgk::ParseError&) {
    return dgk::presentation_from_json(read_json(spec));
  }
}

// a ring literal, or a path to a table-given ring JSON document
dgk::FiniteRing ring_from_spec_or_file(const std::string& spec) {
  try {
    return dgk::parse_ring_spec(spec);
  } catch (const dgk::ParseError&) {
    std::ifstream probe(spec);
    if (!probe) throw;
    dgk::FiniteRing r = dgk::ring_from_json(read_json(spec));
    r.name = spec;
    dgk::ValidationReport rep = dgk::validate_ring(r);
    if (!rep.ok()) throw dgk::ParseError("table ring '" + spec + "' is not a ring", rep);
    return r;
  }
}

// comma list of ring specs; fragments are re-joined greedily so nested
// literals like prod:zmod:2,zmod:3 survive the split
std::vector<dgk::FiniteRing> rings_from_list(const std::string& list) {
  std::vector<std::string> frags;
  std::stringstream ss(list);
  std::string frag;
  while (std::getline(ss, frag, ',')) frags.push_back(frag);
  std::vector<dgk::FiniteRing> out;
  for (size_t i = 0; i < frags.size(); ++i) {
    std::string candidate = frags[i];
    for (;;) {
      try {
        out.push_back(ring_from_spec_or_file(candidate));
        break;
      } catch (const dgk::ParseError&) {
        if (i + 1 >= frags.size()) throw;
        candidate += "," + frags[++i];
      }
    }
  }
  if (out.empty()) throw dgk::ParseError("empty ring list");
  return out;
}

std::vector<dgk::FiniteRing> corpus_from_options(const std::string& rings_flag) {
  if (!rings_flag.empty()) return rings_from_list(rings_flag);
  if (const char* env = std::getenv("DGK_RING_CORPUS")) return rings_from_list(env);
  return dgk::default_ring_corpus();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-groupoid toolkit"};
  app.require_subcommand(1);

  std::string in_path, in2_path, out_path, report_path, against, ring_spec, rings_flag,
      presentation_spec, delta_spec, kind;
  int n = 3, cap = 64, jobs = 1;
  unsigned long long budget = 10000000ULL;

  auto* validate = app.add_subcommand("validate", "validate a groupoid / delta / model document");
  validate->add_option("kind", kind, "groupoid|delta|model")->required();
  validate->add_option("--in", in_path, "input file (default: stdin)");

  auto* construct = app.add_subcommand("construct", "build a named delta structure");
  construct->add_option("kind", kind, "x3|ring-unit|affine|factorized|trivial")->required();
  construct->add_option("--n", n, "letter count for x3");
  construct->add_option("--ring", ring_spec, "ring literal (zmod:n, mat:k:..., prod:...)");
  construct->add_option("--file", in_path, "factorized-group data JSON");
  construct->add_option("--groupoid", in2_path, "groupoid JSON for 'trivial'");
  construct->add_option("--out", out_path, "also write the structure to a file");

  auto* model = app.add_subcommand("model", "build a combinatorial pair model");
  model->add_option("kind", kind, "simply-connected")->required();
  model->add_option("--n", n, "number of marked components");
  model->add_option("--out", out_path, "also write the model to a file");

  auto* morphism_check = app.add_subcommand("morphism-check", "check a delta-morphism document");
  morphism_check->add_option("--in", in_path, "morphism JSON (default: stdin)");

  auto* iso = app.add_subcommand("iso-check", "search for an isomorphism between two deltas");
  iso->add_option("--in", in_path, "first delta (default: stdin)");
  iso->add_option("--against", against, "second delta spec (x3:N, ring-unit:..., file)");
  iso->add_option("--in2", in2_path, "second delta file");
  iso->add_option("--cap", cap, "element-count search cap");

  auto* gcompute = app.add_subcommand("g-compute", "run the model -> delta pipeline");
  gcompute->add_option("--model", in_path, "model JSON (default: stdin)");
  gcompute->add_option("--out", out_path, "write the delta JSON here");
  gcompute->add_option("--report", report_path, "write the pipeline report here");

  auto* ring = app.add_subcommand("ring", "universal ring of a delta, simplified + certificates");
  ring->add_option("--delta", delta_spec, "delta spec or file (default: stdin)");
  ring->add_option("--out", out_path, "write the presentation JSON here");

  auto* homcount = app.add_subcommand("hom-count", "hom-count signature into a ring corpus");
  homcount->add_option("--presentation", presentation_spec,
                       "named presentation or file (default: stdin / upstream ring output)");
  homcount->add_option("--rings", rings_flag, "comma list of ring literals");
  homcount->add_option("--budget", budget, "tuple budget");
  homcount->add_option("--jobs", jobs, "worker cap for the enumeration kernel");

  auto* universal = app.add_subcommand("universal-check", "universal property check for (delta, ring)");
  universal->add_option("--delta", delta_spec, "delta spec or file")->required();
  universal->add_option("--ring", ring_spec, "ring literal")->required();
  universal->add_option("--budget", budget, "search budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      Json doc = read_json(in_path);
      dgk::ValidationReport rep;
      Json data;
      if (kind == "groupoid") {
        dgk::Groupoid g = dgk::groupoid_from_json(doc);
        rep = dgk::validate_groupoid(g);
        data["elements"] = g.n_elements();
        data["objects"] = g.n_objects();
      } else if (kind == "delta") {
        dgk::DeltaGroupoid d = dgk::delta_from_json(doc);
        rep = dgk::validate_groupoid(d.g);  // validate_delta presumes a valid carrier
        if (rep.ok()) rep = dgk::validate_delta(d);
        data["elements"] = d.g.n_elements();
        data["h"] = d.h_size();
      } else if (kind == "model") {
        dgk::ToppModel m = dgk::model_from_json(doc);
        rep = dgk::validate_topp_model(m);
        data["elements"] = m.p.n_elements();
        data["long_arcs"] = static_cast<int>(m.long_arcs().size());
      } else {
        return emit_error("usage", "unknown validate kind '" + kind + "'");
      }
      data["valid"] = rep.ok();
      return emit(rep.ok() ? "ok" : "fail", std::move(data), dgk::report_to_json(rep),
                  rep.ok() ? 0 : 1);
    }

    if (construct->parsed()) {
      dgk::DeltaGroupoid d;
      if (kind == "x3") {
        d = dgk::x3_delta(n);
      } else if (kind == "ring-unit") {
        if (ring_spec.empty()) return emit_error("usage", "construct ring-unit needs --ring");
        d = dgk::ring_unit_delta(ring_from_spec_or_file(ring_spec));
      } else if (kind == "affine") {
        if (ring_spec.empty()) return emit_error("usage", "construct affine needs --ring");
        d = dgk::affine_delta(ring_from_spec_or_file(ring_spec));
      } else if (kind == "factorized") {
        d = dgk::factorized_delta(dgk::factorized_from_json(read_json(in_path)));
      } else if (kind == "trivial") {
        d = dgk::trivial_delta(dgk::groupoid_from_json(read_json(in2_path)));
      } else {
        return emit_error("usage", "unknown construct kind '" + kind + "'");
      }
      return emit("ok", dgk::delta_to_json(d), Json::array(), 0, out_path);
    }

    if (model->parsed()) {
      if (kind != "simply-connected")
        return emit_error("usage", "unknown model kind '" + kind + "'");
      dgk::ToppModel m = dgk::simply_connected_model(n);
      return emit("ok", dgk::model_to_json(m), Json::array(), 0, out_path);
    }

    if (morphism_check->parsed()) {
      dgk::DeltaMorphism f = dgk::delta_morphism_from_json(read_json(in_path));
      dgk::ValidationReport rep = dgk::validate_delta_morphism(f);
      Json data;
      data["is_delta_morphism"] = rep.ok();
      return emit(rep.ok() ? "ok" : "fail", std::move(data), dgk::report_to_json(rep),
                  rep.ok() ? 0 : 1);
    }

    if (iso->parsed()) {
      dgk::DeltaGroupoid d1 = dgk::delta_from_json(read_json(in_path));
      dgk::DeltaGroupoid d2;
      if (!against.empty()) d2 = delta_from_spec(against);
      else if (!in2_path.empty()) d2 = dgk::delta_from_json(read_json(in2_path));
      else return emit_error("usage", "iso-check needs --against or --in2");
      dgk::IsoResult res = dgk::find_isomorphism(d1, d2, cap);
      if (res.status == dgk::IsoStatus::cap_exceeded)
        return emit_error("cap-exceeded",
                          "isomorphism search cap " + std::to_string(cap) + " exceeded");
      Json data;
      data["isomorphic"] = res.status == dgk::IsoStatus::found;
      if (res.iso) data["isomorphism"] = dgk::delta_morphism_to_json(*res.iso);
      bool found = res.status == dgk::IsoStatus::found;
      return emit(found ? "ok" : "fail", std::move(data), Json::array(), found ? 0 : 1);
    }

    if (gcompute->parsed()) {
      dgk::ToppModel m = dgk::model_from_json(read_json(in_path));
      dgk::GOutput out = dgk::functor_g(m);
      if (out.accepted)
        return emit("ok", dgk::delta_to_json(out.delta), Json(out.report_text()), 0, out_path,
                    report_path);
      Json data;
      data["accepted"] = false;
      data["rounds"] = out.rounds;
      return emit("fail", std::move(data), dgk::report_to_json(out.issues), 1, "", report_path);
    }

    if (ring->parsed()) {
      dgk::DeltaGroupoid d = delta_from_spec(delta_spec.empty() ? "-" : delta_spec);
      dgk::PresentedRing p = dgk::universal_ring(d);
      dgk::SimplifyResult s = dgk::simplify(p);
      dgk::CertCheck cf = dgk::check_certificate(s.forward);
      dgk::CertCheck cb = dgk::check_certificate(s.backward);
      if (!cf.ok || !cb.ok)
        return emit_error("certificate", "emitted certificate failed self-check");
      Json data;
      data["presentation"] = dgk::presentation_to_json(s.simplified);
      data["original"] = dgk::presentation_to_json(p);
      data["certificates"]["forward"] = dgk::certificate_to_json(s.forward);
      data["certificates"]["backward"] = dgk::certificate_to_json(s.backward);
      return emit("ok", std::move(data), Json::array(), 0, out_path);
    }

    if (homcount->parsed()) {
      dgk::PresentedRing p;
      if (!presentation_spec.empty()) {
        p = presentation_from_spec(presentation_spec);
      } else {
        Json doc = read_json(in_path);
        // the ring subcommand carries the presentation under "presentation"
        if (doc.is_object() && doc.contains("presentation"))
          p = dgk::presentation_from_json(doc.at("presentation"));
        else
          p = dgk::presentation_from_json(doc);
      }
      dgk::EnumOptions opts;
      opts.budget = budget;
      opts.jobs = jobs;
      auto corpus = corpus_from_options(rings_flag);
      auto sig = dgk::hom_signature(p, corpus, opts);
      Json counts = Json::object();
      for (const auto& row : sig) counts[row.ring] = row.count;
      Json data;
      data["counts"] = std::move(counts);
      return emit("ok", std::move(data), Json::array(), 0, out_path);
    }

    if (universal->parsed()) {
      dgk::DeltaGroupoid d = delta_from_spec(delta_spec);
      dgk::FiniteRing r = ring_from_spec_or_file(ring_spec);
      dgk::EnumOptions opts;
      opts.budget = budget;
      bool ok = dgk::universal_property_check(d, r, opts);
      Json data;
      data["holds"] = ok;
      return emit(ok ? "ok" : "fail", std::move(data), Json::array(), ok ? 0 : 1);
    }
  } catch (const dgk::BudgetError& e) {
    Json rep;
    rep["required"] = e.required;
    return emit_error("budget-exceeded", e.what(), std::move(rep));
  } catch (const dgk::ParseError& e) {
    return emit_error("schema", e.what(), dgk::report_to_json(e.report));
  } catch (const dgk::PreconditionError& e) {
    return emit_error("precondition", e.what());
  } catch (const std::exception& e) {
    return emit_error("internal", e.what());
  }
  return emit_error("usage", "no subcommand handled");
}
