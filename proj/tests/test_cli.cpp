#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "svdyn/cli.hpp"

using namespace svdyn;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) {
    path = std::string("cli_test_") + name;
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kGoldenMean =
    R"({"vertices": ["0","1"], "edges": [[0,0],[0,1],[1,0]]})";
const char* kGoldenMeanAutomaton =
    R"({"graph": {"vertices": ["0","1"], "edges": [[0,0],[0,1],[1,0]]},
        "alphabet": ["0","1"], "labels": ["0","1"]})";
const char* kEvenShiftAutomaton =
    R"({"graph": {"vertices": ["p1","p0","q0"],
                  "edges": [[0,0],[0,2],[1,0],[1,2],[2,1]]},
        "alphabet": ["0","1"], "labels": ["1","0","0"]})";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("graph check: exit 0 on a total graph, 3 on junk") {
  TempFile good("g1.json", kGoldenMean);
  auto r = run({"graph", "check", good.path});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["subcommand"] == "graph check");

  TempFile bad("g2.json", R"({"vertices": ["a"], "edges": []})");
  CHECK(run({"graph", "check", bad.path}).code == 3);
  CHECK(run({"graph", "check", "no_such_file.json"}).code == 3);
  CHECK(run({"graph"}).code == 3);
  CHECK(run({}).code == 3);
}

TEST_CASE("json reports are byte-identical across runs") {
  TempFile g("g3.json", kGoldenMean);
  auto r1 = run({"graph", "check", g.path});
  auto r2 = run({"graph", "check", g.path});
  CHECK(r1.out == r2.out);
  // and they reparse
  CHECK(!parse_json(r1.out).is_discarded());
}

TEST_CASE("graph hom: refuted maps exit 1") {
  TempFile good("h1.json",
                R"({"source": {"vertices": ["a","b"], "edges": [[0,1],[1,0]]},
                    "target": {"vertices": ["p"], "edges": [[0,0]]},
                    "map": [0, 0]})");
  CHECK(run({"graph", "hom", good.path}).code == 0);
  TempFile bad("h2.json",
               R"({"source": {"vertices": ["a","b"], "edges": [[0,1],[1,0]]},
                   "target": {"vertices": ["p","q"], "edges": [[0,0],[1,1]]},
                   "map": [0, 1]})");
  auto r = run({"graph", "hom", bad.path});
  CHECK(r.code == 1);
  CHECK(parse_json(r.out)["payload"]["homomorphism"] == false);
}

TEST_CASE("graph discriminant: tuple and periodic forms") {
  TempFile g("g4.json", kGoldenMean);
  auto r = run({"graph", "discriminant", g.path, "--pattern",
                R"([["0"],["1"],["0"]])"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["payload"]["discriminant"] == Json::array({"0"}));
  // no 1->1 walk
  CHECK(run({"graph", "discriminant", g.path, "--pattern",
             R"([["1"],["1"]])"})
            .code == 1);
  auto rp = run({"graph", "discriminant", g.path, "--cycle", R"([["0"]])"});
  CHECK(rp.code == 0);
  CHECK(run({"graph", "discriminant", g.path}).code == 3);
}

TEST_CASE("shift equal / is-sft") {
  TempFile a("a1.json", kGoldenMeanAutomaton);
  TempFile b("b1.json", kGoldenMeanAutomaton);
  TempFile e("e1.json", kEvenShiftAutomaton);
  CHECK(run({"shift", "equal", a.path, b.path}).code == 0);
  CHECK(run({"shift", "equal", a.path, e.path}).code == 1);
  CHECK(run({"shift", "is-sft", a.path, "--k", "1"}).code == 0);
  CHECK(run({"shift", "is-sft", e.path, "--k", "3"}).code == 1);
}

TEST_CASE("shift recode emits graph, decoder, and dot") {
  TempFile sft("s1.json",
               R"({"alphabet": ["0","1"], "M": 2, "forbidden": ["11"]})");
  auto r = run({"shift", "recode", sft.path, "--dot", "cli_test_out.dot"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["payload"]["graph"]["vertices"].size() == 3);
  CHECK(j["payload"]["decoder"] == Json::array({"0", "0", "1"}));
  std::ifstream dot("cli_test_out.dot");
  REQUIRE(dot.good());
  std::stringstream ss;
  ss << dot.rdbuf();
  CHECK(ss.str().find("digraph") == 0);
  std::remove("cli_test_out.dot");
}

TEST_CASE("tower subcommands") {
  TempFile a("a2.json", kGoldenMeanAutomaton);
  auto tower_json =
      run({"tower", "from-shift", a.path, "--depth", "4", "--out",
           "cli_test_bare_tower.json"});
  REQUIRE(tower_json.code == 0);
  TempFile t("t1.json", parse_json(tower_json.out)["payload"].dump());
  // --out wrote the bare tower, directly loadable
  CHECK(tower_from_json(load_json_file("cli_test_bare_tower.json")).depth() ==
        4);
  std::remove("cli_test_bare_tower.json");

  auto ml = run({"tower", "ml", t.path, "--level", "0", "--depth", "3"});
  CHECK(ml.code == 0);
  CHECK(parse_json(ml.out)["payload"]["witnessed_at"] == 0);

  auto sh = run({"tower", "shadowing", t.path, "--level", "0", "--depth", "3",
                 "--margin", "2"});
  CHECK(sh.code == 0);
  CHECK(parse_json(sh.out)["payload"]["status"]["kind"] == "witnessed");

  auto all = run({"tower", "shadowing", t.path, "--depth", "3", "--margin",
                  "2", "--all-levels"});
  CHECK(all.code == 0);

  TempFile e("e2.json", kEvenShiftAutomaton);
  auto etower = run({"tower", "from-shift", e.path, "--depth", "6"});
  REQUIRE(etower.code == 0);
  TempFile et("t2.json", parse_json(etower.out)["payload"].dump());
  auto esh = run({"tower", "shadowing", et.path, "--level", "0", "--depth",
                  "5", "--margin", "2"});
  CHECK(esh.code == 2);
  CHECK(parse_json(esh.out)["status"] == "undetermined");
}

TEST_CASE("map subcommands on builtins") {
  auto ev = run({"map", "eval", "doubling_sv", "--x", "1"});
  CHECK(ev.code == 0);
  CHECK(parse_json(ev.out)["payload"]["value"] ==
        parse_json(R"([["0","0"],["2","2"]])"));
  // decimal epsilon is converted exactly
  TempFile po("po1.json", R"({"delta": "1/64",
      "points": ["1","127/64","63/32","31/16","15/8","7/4","3/2","65/64","1/32"]})");
  auto ss = run({"map", "shadow-search", "doubling_sv", po.path, "--epsilon",
                 "0.25"});
  CHECK(ss.code == 0);
  Json j = parse_json(ss.out);
  CHECK(j["payload"]["witness_set"].size() > 0);
  CHECK(j["payload"]["orbit"].size() == 9);

  auto pc = run({"map", "pseudo-check", "doubling_sv", po.path});
  CHECK(pc.code == 1);  // distances hit delta exactly; strict < fails

  auto bc1 = run({"map", "ball-criterion", "doubling_sv", "--epsilon", "1/4",
                  "--delta", "1/8"});
  CHECK(bc1.code == 0);
  auto bc2 = run({"map", "ball-criterion", "doubling_nonclosed", "--epsilon",
                  "1/4", "--delta", "1/8"});
  CHECK(bc2.code == 1);

  auto q = run({"map", "quotient", "doubling_sv", "--dyadic", "0"});
  CHECK(q.code == 0);
  CHECK(parse_json(q.out)["payload"]["graph"]["vertices"].size() == 2);
  CHECK(run({"map", "quotient", "doubling_sv"}).code == 3);

  auto img = run({"map", "image", "doubling_sv", "--set", R"([["3/4","5/4"]])"});
  CHECK(img.code == 0);
  CHECK(parse_json(img.out)["payload"]["value"] ==
        parse_json(R"([["0","1/2"],["3/2","2"]])"));

  auto pre = run({"map", "preimage", "cantor_ternary(2)", "--set",
                  R"([["3","3"]])"});
  CHECK(pre.code == 0);

  auto disc = run({"map", "discriminant", "doubling_sv", "--pattern",
                   R"([[["3/8","5/8"]],[["7/8","9/8"]]])"});
  CHECK(disc.code == 0);
  CHECK(parse_json(disc.out)["payload"]["discriminant"] ==
        parse_json(R"([["7/16","9/16"]])"));

  auto snap = run({"map", "snap", "doubling_sv", "--dyadic", "1"});
  CHECK(snap.code == 0);
}

TEST_CASE("example subcommand emits valid maps") {
  auto r = run({"example", "doubling_sv"});
  CHECK(r.code == 0);
  Json j = parse_json(r.out);
  CHECK(j["payload"]["graph_closed"] == true);
  auto r2 = run({"example", "cantor_ternary", "--depth", "2"});
  CHECK(r2.code == 0);
  CHECK(parse_json(r2.out)["payload"]["domain"].size() == 10);
  CHECK(run({"example", "nonsense"}).code == 3);
}

TEST_CASE("map quotient accepts an explicit partition file") {
  TempFile p("p1.json",
             R"({"cells": [[["0","1"]],
                 [{"lo":"1","hi":"2","lo_closed":false,"hi_closed":true}]]})");
  auto r = run({"map", "quotient", "doubling_sv", "--partition", p.path});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["payload"]["graph"]["edges"].size() == 4);
}

TEST_CASE("SVDYN_MAX_STATES caps state growth with exit 3") {
  TempFile e("e3.json", kEvenShiftAutomaton);
  setenv("SVDYN_MAX_STATES", "2", 1);
  auto r = run({"shift", "is-sft", e.path, "--k", "4"});
  unsetenv("SVDYN_MAX_STATES");
  CHECK(r.code == 3);
  CHECK(parse_json(r.out)["summary"].get<std::string>().find(
            "SVDYN_MAX_STATES") != std::string::npos);
  CHECK(run({"shift", "is-sft", e.path, "--k", "4"}).code == 1);
}

TEST_CASE("text format prints a one-line summary") {
  TempFile g("g5.json", kGoldenMean);
  auto r = run({"--format", "text", "graph", "check", g.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("graph check: ok") == 0);
}

TEST_SUITE_END();
