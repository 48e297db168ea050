#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "dgk/hom_enum.hpp"
#include "dgk/json_io.hpp"
#include "helpers.hpp"

using namespace dgk;

TEST_CASE("groupoid, delta and model documents round-trip") {
  for (const Groupoid& g : {pair_groupoid({"a", "b", "c"}), cyclic_group_groupoid(5),
                            testutil::s3_groupoid(), Groupoid{}}) {
    CHECK(groupoid_from_json(groupoid_to_json(g)) == g);
  }
  for (const DeltaGroupoid& d : {x3_delta(3), ring_unit_delta(zmod(7)), affine_delta(zmod(3))}) {
    CHECK(delta_from_json(delta_to_json(d)) == d);
  }
  ToppModel m = simply_connected_model(3);
  CHECK(model_from_json(model_to_json(m)) == m);
}

TEST_CASE("presentation and certificate documents round-trip") {
  for (const PresentedRing& p :
       {presentation_zfree({"x0", "x1"}), parse_presentation_spec("localized-zfree4"),
        universal_ring(ring_unit_delta(zmod(5))), PresentedRing::zero()}) {
    CHECK(presentation_from_json(presentation_to_json(p)) == p);
  }
  SimplifyResult s = simplify(universal_ring(x3_delta(2)));
  RingHomCertificate back = certificate_from_json(certificate_to_json(s.forward));
  CHECK(back.source == s.forward.source);
  CHECK(back.target == s.forward.target);
  CHECK(back.images == s.forward.images);
  CHECK(back.traces == s.forward.traces);
  CHECK(check_certificate(back).ok);
}

TEST_CASE("ring and morphism documents round-trip") {
  FiniteRing r = product_ring(zmod(2), zmod(3));
  FiniteRing back = ring_from_json(ring_to_json(r));
  CHECK(back.names == r.names);
  CHECK(back.add == r.add);
  CHECK(back.mul == r.mul);
  CHECK(back.zero == r.zero);
  CHECK(back.one == r.one);

  DeltaMorphism f = canonical_embedding(zmod(5));
  DeltaMorphism fb = delta_morphism_from_json(delta_morphism_to_json(f));
  CHECK(fb == f);
  CHECK(is_delta_morphism(fb));

  FactorizedGroupData fd{testutil::s3_groupoid(),
                         {0, testutil::s3_groupoid().element_index("(12)")},
                         testutil::s3_groupoid().element_index("(13)")};
  FactorizedGroupData fdb = factorized_from_json(factorized_to_json(fd));
  CHECK(fdb.group == fd.group);
  CHECK(fdb.g_plus == fd.g_plus);
  CHECK(fdb.theta == fd.theta);
}

TEST_CASE("dangling identifiers raise structural parse errors") {
  Json j = groupoid_to_json(pair_groupoid({"a", "b"}));
  j["elements"][0]["inv"] = "missing";
  try {
    groupoid_from_json(j);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.report.has_code("dangling-element"));
  }
}

#ifdef DGK_CLI_PATH

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(DGK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/dgk_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli: construct | validate pipelines") {
  std::string x3 = tmp_file("x34.json", run_cli("construct x3 --n 4").out);
  CliResult v = run_cli("validate delta --in " + x3);
  CHECK(v.exit_code == 0);

  CHECK(run_cli("construct ring-unit --ring zmod:5 | " + std::string(DGK_CLI_PATH) +
                " validate delta")
            .exit_code == 0);
  CHECK(run_cli("construct affine --ring zmod:3 | " + std::string(DGK_CLI_PATH) +
                " validate delta")
            .exit_code == 0);
}

TEST_CASE("cli: model pipeline matches the x3 family") {
  CliResult r = run_cli("model simply-connected --n 3 | " + std::string(DGK_CLI_PATH) +
                        " g-compute | " + std::string(DGK_CLI_PATH) + " iso-check --against x3:3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"isomorphic\": true") != std::string::npos);
}

TEST_CASE("cli: hom-count agreement between the universal ring of x3:3 and the localization") {
  CliResult a = run_cli("ring --delta x3:3 | " + std::string(DGK_CLI_PATH) +
                        " hom-count --rings zmod:3");
  CliResult b = run_cli("hom-count --presentation localized-zfree4 --rings zmod:3");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out.find("\"zmod:3\": 8") != std::string::npos);
  CHECK(b.out.find("\"zmod:3\": 8") != std::string::npos);
}

TEST_CASE("cli: identical inputs give byte-identical envelopes") {
  CliResult one = run_cli("construct x3 --n 3");
  CliResult two = run_cli("construct x3 --n 3");
  CHECK(one.out == two.out);
  CliResult h1 = run_cli("hom-count --presentation zfree:2");
  CliResult h2 = run_cli("hom-count --presentation zfree:2");
  CHECK(h1.out == h2.out);
}

TEST_CASE("cli: exit codes distinguish false from error") {
  // corrupted delta: validate exits 1
  Json j = delta_to_json(x3_delta(3));
  j["k"][0][1] = j["h"][1];  // break involutivity
  std::string bad = tmp_file("bad_delta.json", j.dump());
  CHECK(run_cli("validate delta --in " + bad).exit_code == 1);

  // invalid JSON: exit 2 with a schema error
  std::string garbage = tmp_file("garbage.json", "{not json");
  CliResult r = run_cli("validate groupoid --in " + garbage);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"status\": \"error\"") != std::string::npos);

  // budget refusal: exit 2 with the machine-readable code
  CliResult budget = run_cli("hom-count --presentation zfree:9 --rings zmod:7 --budget 100");
  CHECK(budget.exit_code == 2);
  CHECK(budget.out.find("budget-exceeded") != std::string::npos);

  // cap refusal on iso-check
  std::string x5 = tmp_file("x35.json", run_cli("construct x3 --n 5").out);
  CliResult cap = run_cli("iso-check --in " + x5 + " --against x3:5");
  CHECK(cap.exit_code == 2);
  CHECK(cap.out.find("cap-exceeded") != std::string::npos);
}

TEST_CASE("cli: universal-check and morphism-check") {
  CHECK(run_cli("universal-check --delta ring-unit:zmod:3 --ring zmod:3").exit_code == 0);
  CHECK(run_cli("universal-check --delta x3:3 --ring zmod:2").exit_code == 0);

  std::string good = tmp_file("embed.json", delta_morphism_to_json(canonical_embedding(zmod(5))).dump());
  CHECK(run_cli("morphism-check --in " + good).exit_code == 0);

  DeltaMorphism broken = canonical_embedding(zmod(5));
  std::swap(broken.element_map[1], broken.element_map[2]);
  std::string badm = tmp_file("embed_bad.json", delta_morphism_to_json(broken).dump());
  CHECK(run_cli("morphism-check --in " + badm).exit_code == 1);
}

TEST_CASE("cli: factorized construct from a file") {
  Groupoid s3 = testutil::s3_groupoid();
  FactorizedGroupData fd{s3, {0, s3.element_index("(12)")}, s3.element_index("(13)")};
  std::string path = tmp_file("fd_s3.json", factorized_to_json(fd).dump());
  CliResult r = run_cli("construct factorized --file " + path + " | " +
                        std::string(DGK_CLI_PATH) + " validate delta");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: table-given rings load from JSON files") {
  std::string path = tmp_file("z6.json", ring_to_json(zmod(6)).dump());
  CliResult r = run_cli("hom-count --presentation zfree:1 --rings " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(": 2") != std::string::npos);  // |units(Z/6)| = 2

  CliResult c = run_cli("construct ring-unit --ring " + path + " | " +
                        std::string(DGK_CLI_PATH) + " validate delta");
  CHECK(c.exit_code == 0);
}

TEST_CASE("cli: ring corpus override via environment") {
  CliResult r = run_cli("hom-count --presentation zfree:1 --rings zmod:4,prod:zmod:2,zmod:3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"zmod:4\": 2") != std::string::npos);
  CHECK(r.out.find("\"prod:zmod:2,zmod:3\": 2") != std::string::npos);

  setenv("DGK_RING_CORPUS", "zmod:5", 1);
  CliResult env = run_cli("hom-count --presentation zfree:1");
  unsetenv("DGK_RING_CORPUS");
  CHECK(env.exit_code == 0);
  CHECK(env.out.find("\"zmod:5\": 4") != std::string::npos);
  CHECK(env.out.find("zmod:2") == std::string::npos);
}

#endif  // DGK_CLI_PATH
