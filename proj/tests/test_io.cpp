#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "strathom/algebra/fixtures.hpp"
#include "strathom/io/cli.hpp"
#include "strathom/io/document.hpp"
#include "strathom/io/expression.hpp"
#include "strathom/rep/decompose.hpp"

using namespace strathom;
using namespace strathom::io;
using algebra::Presentation;
using linalg::Field;
using linalg::Scalar;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kFx42 = R"({
  "format_version": "1",
  "name": "FX-42",
  "field": "Q",
  "quiver": {
    "vertices": ["1", "2"],
    "arrows": [
      {"id": "alpha", "source": "2", "target": "1"},
      {"id": "beta", "source": "1", "target": "2"}
    ]
  },
  "relations": [["alpha", "beta", "alpha"]]
})";

std::string with_relations(const std::string& relations) {
  std::string text = kFx42;
  const auto at = text.find("[[\"alpha\", \"beta\", \"alpha\"]]");
  return text.replace(at, std::string("[[\"alpha\", \"beta\", \"alpha\"]]").size(), relations);
}

/// Random quiver with relations built from parallel paths of length 2 or 3;
/// not necessarily finite-dimensional.
Presentation random_presentation(std::mt19937_64& rng) {
  Presentation p;
  p.field = gen::field(rng);
  const std::size_t n = 1 + rng() % 4;
  for (std::size_t v = 0; v < n; ++v) p.quiver.vertices.push_back("v" + std::to_string(v));
  const std::size_t arrows = rng() % 6;
  for (std::size_t a = 0; a < arrows; ++a) p.quiver.arrows.push_back({"x" + std::to_string(a), rng() % n, rng() % n});
  std::vector<algebra::Word> paths;
  for (std::size_t a = 0; a < arrows; ++a) {
    for (std::size_t b = 0; b < arrows; ++b) {
      if (p.quiver.arrows[a].target != p.quiver.arrows[b].source) continue;
      paths.push_back({a, b});
      for (std::size_t c = 0; c < arrows; ++c) {
        if (p.quiver.arrows[b].target == p.quiver.arrows[c].source) paths.push_back({a, b, c});
      }
    }
  }
  if (paths.empty()) return p;
  const std::size_t rels = rng() % 3;
  for (std::size_t r = 0; r < rels; ++r) {
    const algebra::Word& w = paths[rng() % paths.size()];
    algebra::Relation rel{{rng() % 2 ? Scalar::one(p.field) : gen::small_scalar(rng, p.field, 1, 4), w}};
    for (const auto& other : paths) {
      if (other != w && p.quiver.arrows[other.front()].source == p.quiver.arrows[w.front()].source &&
          p.quiver.arrows[other.back()].target == p.quiver.arrows[w.back()].target && rng() % 2) {
        rel.push_back({gen::small_scalar(rng, p.field), other});
      }
    }
    p.relations.push_back(rel);
  }
  return p;
}

Json json_of(const Report& r) { return Json::parse(r.render()); }

}  // namespace

TEST_CASE("documents of the fixtures build with the expected dimensions") {
  const AlgebraDocument a2 = parse_algebra(serialize(document_of(algebra::fixture_presentation("FX-A2"))));
  CHECK(algebra::build_algebra(a2.presentation)->dim() == 3);
  const AlgebraDocument fx42 = parse_algebra(kFx42);
  CHECK(fx42.presentation.name == "FX-42");
  CHECK(fx42.presentation.relations.size() == 1);
  CHECK(fx42.presentation.relations[0][0].path.size() == 3);
  CHECK(algebra::build_algebra(fx42.presentation)->dim() == 7);
}

TEST_CASE("semantic errors in documents") {
  CHECK(kind_of([] { parse_algebra(with_relations(R"([[{"coeff": "1", "path": ["alpha", "beta"]}, {"coeff": "1", "path": ["beta", "alpha"]}]])")); }) ==
        ErrorKind::MalformedRelation);
  CHECK(kind_of([] { parse_algebra(with_relations(R"([["alpha", "gamma"]])")); }) == ErrorKind::MalformedRelation);
  CHECK(kind_of([] { parse_algebra(with_relations(R"([["alpha", "alpha"]])")); }) == ErrorKind::MalformedRelation);
  CHECK(kind_of([] { parse_algebra(with_relations("[[]]")); }) == ErrorKind::MalformedRelation);
  CHECK(message_of([] { parse_algebra(with_relations(R"([["alpha", "gamma"]])")); }).find("unknown arrow 'gamma'") != std::string::npos);

  std::string extra = kFx42;
  extra.insert(extra.find("\"name\""), "\"comment\": \"x\", ");
  CHECK(message_of([&] { parse_algebra(extra); }).find("unknown field 'comment'") != std::string::npos);
  std::string missing = kFx42;
  missing.replace(missing.find("\"field\": \"Q\","), std::string("\"field\": \"Q\",").size(), "");
  CHECK(message_of([&] { parse_algebra(missing); }).find("missing field 'field'") != std::string::npos);
  std::string version = kFx42;
  version.replace(version.find("\"1\""), 3, "\"2\"");
  CHECK(kind_of([&] { parse_algebra(version); }) == ErrorKind::InvalidArgument);
  std::string dangling = kFx42;
  dangling.replace(dangling.find("\"target\": \"1\""), std::string("\"target\": \"1\"").size(), "\"target\": \"7\"");
  CHECK(message_of([&] { parse_algebra(dangling); }).find("unknown vertex '7'") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"format_version\": \"1\",\n  \"field\" \"Q\"\n}";
  CHECK(kind_of([&] { parse_algebra(text); }) == ErrorKind::Parse);
  CHECK(message_of([&] { parse_algebra(text); }).find("line 3, column 13") != std::string::npos);
  CHECK(message_of([] { parse_algebra("[1, 2"); }).find("line 1, column 6") != std::string::npos);
}

TEST_CASE("serialize is a fixed point of parse on fixtures over Q and F_5") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    for (const auto& name : algebra::fixture_names()) {
      CAPTURE(name);
      const std::string text = serialize(document_of(algebra::fixture_presentation(name, f)));
      CHECK(serialize(parse_algebra(text)) == text);
    }
  }
}

TEST_CASE("property: random presentations round-trip byte-identically") {
  std::mt19937_64 rng(8101);
  for (int trial = 0; trial < 200; ++trial) {
    const Presentation p = random_presentation(rng);
    const std::string text = serialize(document_of(p));
    const AlgebraDocument back = parse_algebra(text);
    CHECK(serialize(back) == text);
    REQUIRE(back.presentation.relations.size() == p.relations.size());
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      REQUIRE(back.presentation.relations[r].size() == p.relations[r].size());
      for (std::size_t t = 0; t < p.relations[r].size(); ++t) {
        CHECK(back.presentation.relations[r][t].path == p.relations[r][t].path);
        CHECK(back.presentation.relations[r][t].coeff == p.relations[r][t].coeff);
      }
    }
  }
}

TEST_CASE("single-term relations normalize to the path shorthand") {
  const std::string term = with_relations(R"([[{"coeff": 1, "path": ["alpha", "beta", "alpha"]}]])");
  CHECK(serialize(parse_algebra(term)) == serialize(parse_algebra(kFx42)));
}

TEST_CASE("module expressions") {
  const auto fx43 = algebra::fixture("FX-43");
  CHECK(evaluate_module(fx43, "P2+S2").dims() == std::vector<std::size_t>{1, 3});
  CHECK(evaluate_module(fx43, "P1 + P2").dims() == rep::regular(fx43).dims());
  CHECK(evaluate_module(fx43, "A").total_dim() == 5);
  CHECK(evaluate_module(fx43, "S1^3").dims() == std::vector<std::size_t>{3, 0});
  CHECK(evaluate_module(fx43, "0").is_zero());
  CHECK(rep::is_isomorphic(evaluate_module(fx43, "rad(P2)"), rep::projective(fx43, 0)));
  CHECK(rep::is_isomorphic(evaluate_module(fx43, "top(P2+P1)"), evaluate_module(fx43, "S1+S2")));
  CHECK(rep::is_isomorphic(evaluate_module(fx43, "P2/tr(P1)"), rep::simple(fx43, 1)));
  CHECK(rep::is_isomorphic(evaluate_module(fx43, "(P2/tr(S2))^2"), evaluate_module(fx43, "P2/tr(S2) + P2/tr(S2)")));

  const auto fx41 = algebra::fixture("FX-41");
  const auto t1 = evaluate_module(fx41, "P2/tr(P3)");
  CHECK(t1.dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(rep::is_indecomposable(t1));

  const auto can = algebra::fixture("FX-CAN222");
  CHECK(evaluate_module(can, "S[inf]").dims() == std::vector<std::size_t>{0, 0, 0, 0, 1});
  CHECK(evaluate_module(can, "P0").total_dim() == 6);

  CHECK(kind_of([&] { evaluate_module(fx43, "P3"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { evaluate_module(fx43, "P2 S2"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { evaluate_module(fx43, "P2/P1"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { evaluate_module(fx43, "(P2"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { evaluate_module(fx43, ""); }) == ErrorKind::Parse);
}

TEST_CASE("explicit modules") {
  const auto a2 = algebra::fixture("FX-A2");
  const auto m = evaluate_module(a2, R"({"format_version": "1", "dim_vector": [1, 1], "arrows": {"a": [["1"]]}})");
  CHECK(rep::is_isomorphic(m, rep::projective(a2, 0)));
  const auto split = evaluate_module(a2, R"({"format_version": "1", "dim_vector": [1, 1]})");
  CHECK(rep::is_isomorphic(split, evaluate_module(a2, "S1+S2")));
  CHECK(kind_of([&] { evaluate_module(a2, R"({"format_version": "1", "dim_vector": [1, 1], "arrows": {"a": [["1", "0"]]}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { evaluate_module(a2, R"({"format_version": "1", "dim_vector": [1], "arrows": {}})"); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { evaluate_module(a2, R"({"format_version": "1", "dim_vector": [1, 1], "arrows": {"b": [["1"]]}})"); }) ==
        ErrorKind::InvalidArgument);

  // Relation alpha*beta*alpha = 0 violated by the all-ones action.
  const auto fx42 = algebra::fixture("FX-42");
  const std::string bad = R"({"format_version": "1", "dim_vector": [1, 1], "arrows": {"alpha": [["1"]], "beta": [["1"]]}})";
  CHECK_THROWS_AS(evaluate_module(fx42, bad), Error);
}

TEST_CASE("property: explicit module JSON round-trips") {
  std::mt19937_64 rng(77);
  for (const auto& name : {"FX-A3", "FX-KRON", "FX-41", "FX-42", "FX-43", "FX-CAN222"}) {
    const auto a = algebra::fixture(name);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<rep::Representation> parts;
      for (std::size_t k = 0; k < 1 + rng() % 2; ++k) {
        const std::size_t v = rng() % a->num_vertices();
        parts.push_back(rng() % 2 ? rep::projective(a, v) : rep::top(rep::projective(a, v)).module);
      }
      const auto m = rep::direct_sum(parts).sum;
      const auto back = module_from_json(a, Json::parse(module_to_json(m).dump()));
      CHECK(rep::same_presentation(m, back));
    }
  }
}

TEST_CASE("algebra elements and complexes round-trip") {
  const auto fx41 = algebra::fixture("FX-41");
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    linalg::Matrix x = fx41->zero();
    for (std::size_t i = 0; i < fx41->dim(); ++i) {
      if (rng() % 3 == 0) x(0, i) = gen::small_scalar(rng, fx41->field());
    }
    CHECK(element_from_json(*fx41, element_to_json(*fx41, x)) == x);
  }
  CHECK(element_to_json(*fx41, fx41->zero()) == Json::array());
  const linalg::Matrix ab = element_from_json(*fx41, Json::parse(R"(["alpha", "beta"])"));
  const linalg::Matrix dg = element_from_json(*fx41, Json::parse(R"(["delta", "gamma"])"));
  CHECK(ab == dg);
  CHECK(element_from_json(*fx41, Json::parse(R"(["gamma", "alpha"])")).is_zero());

  const auto fx43 = algebra::fixture("FX-43");
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto c = homology::staircase(fx43, m);
    const auto back = complex_from_json(fx43, Json::parse(complex_to_json(c).dump()));
    CHECK(back.lowest == c.lowest);
    CHECK(back.terms == c.terms);
    for (std::size_t i = 0; i < c.diffs.size(); ++i) CHECK(back.diffs[i].entry == c.diffs[i].entry);
  }
  Json bad = complex_to_json(homology::staircase(fx43, 2));
  bad["differentials"][0][0][0] = Json::parse(R"(["alpha"])");
  CHECK(kind_of([&] { complex_from_json(fx43, bad); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sha256 digest") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("cli: stratify FX-A3 reports three one-dimensional leaves") {
  const Report r = run_command({"stratify", "FX-A3", "--json"});
  CHECK(r.exit_code == kExitOk);
  const Json j = json_of(r);
  CHECK(j["provenance"]["fixture"] == "FX-A3");
  CHECK(j["result"]["leaf_count"] == 3);
  for (const auto& leaf : j["result"]["leaves"]) CHECK(leaf["dim"] == 1);
  CHECK(j["result"]["tree"]["verified"] == true);
}

TEST_CASE("cli: recollement of FX-43 with P2+S2") {
  const Report r = run_command({"recollement", "FX-43", "--tilting", "P2+S2", "--json"});
  CHECK(r.exit_code == kExitOk);
  const Json j = json_of(r)["result"];
  CHECK(j["ok"] == true);
  CHECK(j["ranks"]["A"] == 2);
  CHECK(j["ranks"]["B"] == 1);
  CHECK(j["ranks"]["C"] == 1);
  CHECK(j["B"]["dim"] == 4);
  CHECK(j["B"]["center_dim"] == 1);
  CHECK(j["homological_epi"] == "Certified(true)");
}

TEST_CASE("cli: sgldim-probe on FX-43 reaches the staircase length") {
  const Json j = json_of(run_command({"sgldim-probe", "FX-43", "--max-len", "6", "--json"}))["result"];
  CHECK(j["lower_bound"] == 6);
  CHECK(j["witness"]["cancellations"] == 0);
  const Json a3 = json_of(run_command({"sgldim-probe", "FX-A3", "--max-len", "6", "--json"}))["result"];
  CHECK(a3["lower_bound"] == 0);
}

TEST_CASE("cli: reports are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"info", "FX-CAN222", "--json"}, {"epi-check", "FX-41", "--tilting", "P1+P2+P2/tr(P3)", "--json"},
        {"stratify", "FX-CAN222", "--all-orders", "--json"}, {"pd", "FX-42", "S1", "--json"}}) {
    CHECK(run_command(args).render() == run_command(args).render());
  }
}

TEST_CASE("cli: exit codes") {
  CHECK(run_command({"gldim", "FX-43"}).exit_code == kExitOk);
  CHECK(run_command({"gldim", "FX-43", "--cap", "1"}).exit_code == kExitUnknown);
  CHECK(run_command({"pd", "FX-42", "S1", "--cap", "1"}).exit_code == kExitOk);
  CHECK(run_command({"gldim", "no-such-file.json"}).exit_code == kExitInputError);
  CHECK(run_command({"ext", "FX-43", "P7", "S1"}).exit_code == kExitInputError);
  CHECK(run_command({"frobnicate"}).exit_code == kExitInputError);
  CHECK(run_command({"gldim"}).exit_code == kExitInputError);
  CHECK(run_command({"stratify", "FX-42"}).exit_code == kExitInputError);
  CHECK(run_command({"pd", "FX-43", "S1", "--dot"}).exit_code == kExitInputError);
  CHECK(run_command({"recollement", "FX-A2", "--perpendicular", "P1+P1"}).exit_code == kExitInputError);
  const Report help = run_command({"--help"});
  CHECK(help.exit_code == kExitOk);
  CHECK(help.render().find("sgldim-probe") != std::string::npos);
  // Negative verdicts are still results.
  CHECK(run_command({"epi-check", "FX-41", "--tilting", "P1+P2+P2/tr(P3)"}).exit_code == kExitOk);
  CHECK(run_command({"recollement", "FX-42", "--idempotent", "2"}).exit_code == kExitOk);
}

TEST_CASE("cli: errors are structured under --json") {
  const Json j = json_of(run_command({"ext", "FX-43", "P7", "S1", "--json"}));
  CHECK(j["exit_code"] == 1);
  CHECK(j["error"].get<std::string>().find("unknown vertex '7'") != std::string::npos);
  CHECK_FALSE(j.contains("result"));
}

TEST_CASE("cli: the remaining subcommands") {
  Json j = json_of(run_command({"ext", "FX-41", "P2/tr(S2)", "S1", "--json"}))["result"];
  CHECK(j["ext_dims"]["2"] == 1);
  j = json_of(run_command({"ext", "FX-KRON", "S1", "S2", "--degree", "1", "--json"}))["result"];
  CHECK(j["ext_dims"]["1"] == 2);
  CHECK(j["ext_dims"].size() == 1);
  j = json_of(run_command({"pd", "FX-43", "S1", "--json"}))["result"];
  CHECK(j["pd"] == "Finite(2)");
  CHECK(j["terms"].size() == 3);
  j = json_of(run_command({"tilting-check", "FX-43", "--tilting", "P2+S2", "--json"}))["result"];
  CHECK(j["tilting"] == true);
  j = json_of(run_command({"tilting-check", "FX-43", "--tilting", "S2", "--json"}))["result"];
  CHECK(j["tilting"] == false);
  j = json_of(run_command({"ell", "FX-A3", "--tilting", "P1+P3+S3", "--json"}))["result"];
  CHECK(j["ell"]["dim"] == 7);
  CHECK(j["trace_dim"] == 0);
  j = json_of(run_command({"ell", "FX-42", "--idempotent", "2", "--json"}))["result"];
  CHECK(j["ell"]["dim_vector"] == Json::parse("[1, 0]"));
  j = json_of(run_command({"epi-check", "FX-A3", "--tilting", "P1+P3+S3", "--json"}))["result"];
  CHECK(j["phi_injective"] == true);
  CHECK(j["homological_epi"] == "Certified(true)");
  j = json_of(run_command({"heredity", "FX-43", "--vertices", "1", "--json"}))["result"];
  CHECK(j["heredity"] == true);
  CHECK(j["recollement"]["ok"] == true);
  j = json_of(run_command({"heredity", "FX-42", "--vertices", "1", "--json"}))["result"];
  CHECK(j["projective"] == false);
  j = json_of(run_command({"exseq-check", "FX-A3", "S1", "P2", "P3", "--json"}))["result"];
  CHECK(j["exceptional_sequence"] == true);
  CHECK(j["complete"] == true);
  j = json_of(run_command({"exseq-check", "FX-A3", "P2", "S1", "--json"}))["result"];
  CHECK(j["exceptional_sequence"] == false);
  j = json_of(run_command({"minimize", "FX-43", "--staircase", "4", "--json"}))["result"];
  CHECK(j["unchanged"] == true);
  CHECK(j["length"] == 4);
  j = json_of(run_command({"recollement", "FX-A2", "--perpendicular", "S1", "--json"}))["result"];
  CHECK(j["ranks_additive"] == true);
  CHECK(j["ranks"]["B"] == 1);
  const Report dot = run_command({"stratify", "FX-A3", "--dot"});
  CHECK(dot.render().rfind("digraph", 0) == 0);
  CHECK(run_command({"info", "FX-KRON", "--dot"}).render().find("\"1\" -> \"2\" [label=\"b\"]") != std::string::npos);
  j = json_of(run_command({"info", "FX-43", "--field", "Fp:3", "--json"}));
  CHECK(j["result"]["field"] == "Fp:3");
  CHECK(j["result"]["dim"] == 5);
}

TEST_CASE("cli: fixtures verify and materialize") {
  const Report v = run_command({"fixtures", "--verify", "--json"});
  CHECK(v.exit_code == kExitOk);
  const Json j = json_of(v)["result"];
  CHECK(j["all_passed"] == true);
  CHECK(j["fixtures"].size() == 7);

  const auto dir = std::filesystem::temp_directory_path() / "strathom-test-materialize";
  std::filesystem::remove_all(dir);
  const Report m = run_command({"fixtures", "--materialize", dir.string(), "--staircases", "3", "--json"});
  REQUIRE(m.exit_code == kExitOk);
  CHECK(json_of(m)["result"]["materialized"].size() == 10);
  for (const auto& name : algebra::fixture_names()) {
    std::ifstream in(dir / (name + ".json"));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(serialize(parse_algebra(ss.str())) == ss.str());
    const Json info = json_of(run_command({"info", (dir / (name + ".json")).string(), "--json"}));
    CHECK(info["result"]["dim"] == algebra::fixture(name)->dim());
    CHECK(info["provenance"]["input_sha256"] == sha256_hex(ss.str()));
  }
  const Json c = json_of(run_command({"minimize", "FX-43", "--complex", (dir / "staircase-3.json").string(), "--json"}));
  CHECK(c["result"]["length"] == 3);
  CHECK(c["provenance"]["files"].size() == 1);
  std::filesystem::remove_all(dir);
}
