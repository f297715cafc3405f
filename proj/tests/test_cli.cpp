#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

// Runs BIN with the given arguments (a shell fragment), returning exit code
// and stdout. stderr is dropped; tests that care about it redirect
// explicitly inside `args`.
RunResult run(const std::string& args, const std::string& stdin_file = "") {
    std::string cmd = std::string(GLPATH_BIN) + " " + args;
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp_path(const std::string& tag) {
    return std::string("/tmp/glpath_cli_") + tag + "_" +
           std::to_string(getpid());
}

std::string write_tmp(const std::string& tag, const std::string& text) {
    std::string path = tmp_path(tag);
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string& single_edge_file() {
    static std::string path = write_tmp(
        "edge",
        R"({"group":{"kind":"cyclic","n":2},"vertices":["a","b"],)"
        R"("S":["a"],"T":["b"],"edges":[{"u":"a","v":"b","label":"1"}]})");
    return path;
}

// a 4.x-second build, shared across the test cases that need a catalog
const std::string& catalog_file() {
    static std::string path = [] {
        std::string group = write_tmp("group", R"({"kind":"cyclic","n":2})");
        std::string out = tmp_path("catalog");
        RunResult r = run("gadget-search --r 1 --nmax 4 --input " + group +
                          " --output " + out);
        REQUIRE(r.code == 0);
        return out;
    }();
    return path;
}

} // namespace

TEST_CASE("solve: golden output bytes") {
    RunResult r = run("solve", single_edge_file());
    CHECK(r.code == 0);
    CHECK(r.out == R"({
  "hitting": 1,
  "hitting_witness": [
    "a"
  ],
  "packing": 2,
  "packing_witness": [
    [
      "a",
      "b"
    ],
    [
      "a",
      "b"
    ]
  ]
}
)");
}

TEST_CASE("solve: --output writes the same bytes as stdout") {
    std::string out = tmp_path("solveout");
    RunResult direct = run("solve", single_edge_file());
    RunResult filed = run("solve --output " + out, single_edge_file());
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(out) == direct.out);
}

TEST_CASE("solve: dot sidecar marks S, T and the certificates") {
    std::string dot = tmp_path("dot");
    RunResult r = run("solve --dot " + dot, single_edge_file());
    CHECK(r.code == 0);
    std::string text = slurp(dot);
    CHECK(text.find("graph G {") != std::string::npos);
    CHECK(text.find("shape=box") != std::string::npos);     // an S vertex
    CHECK(text.find("shape=diamond") != std::string::npos); // a T vertex
    CHECK(text.find("penwidth=2") != std::string::npos);    // a packed edge
}

TEST_CASE("construct figure1 matches the frozen golden file") {
    RunResult r = run("construct figure1 --n 1");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(GLPATH_TEST_DATA) + "/figure1_n1.json"));
}

TEST_CASE("construct | verify-figure1 round trip") {
    std::string g = tmp_path("fig1");
    REQUIRE(run("construct figure1 --n 1 --output " + g).code == 0);
    RunResult v = run("verify-figure1", g);
    CHECK(v.code == 0);
    json rep = json::parse(v.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["n"] == 1);
    CHECK(rep["no_two_disjoint"] == true);
    CHECK(rep["hitting_exact"] == 1);
    // explicit --n must agree with the inferred one
    RunResult v2 = run("verify-figure1 --n 1", g);
    CHECK(v2.out == v.out);
}

TEST_CASE("construct random is deterministic per seed") {
    RunResult a = run("construct random --nv 6 --edge-prob 0.5 --seed 9");
    RunResult b = run("construct random --nv 6 --edge-prob 0.5 --seed 9");
    RunResult c = run("construct random --nv 6 --edge-prob 0.5 --seed 10");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    json j = json::parse(a.out);
    CHECK(j["vertices"].size() == 6);
    CHECK(j["group"]["n"] == 2); // default group

    RunResult k = run(
        "construct random --nv 5 --group "
        R"('{"kind":"product","factors":[{"kind":"cyclic","n":2},)"
        R"({"kind":"cyclic","n":2}]}' --seed 3)");
    CHECK(k.code == 0);
    json kj = json::parse(k.out);
    CHECK(kj["group"]["kind"] == "product");
    CHECK(kj["group"]["factors"].size() == 2);
}

TEST_CASE("exit codes: parse failures and budget exhaustion") {
    CHECK(run("no-such-subcommand").code == 1);
    CHECK(run("solve --no-such-flag", single_edge_file()).code == 1);

    std::string junk = write_tmp("junk", "this is not json");
    CHECK(run("solve", junk).code == 1);

    std::string fig = tmp_path("fig1b");
    REQUIRE(run("construct figure1 --n 1 --output " + fig).code == 0);
    CHECK(run("solve --budget-paths 1", fig).code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").code == 0);
    CHECK(run("solve --help").code == 0);
}

TEST_CASE("type and type-eq") {
    std::string a = write_tmp(
        "ta",
        R"({"group":{"kind":"cyclic","n":2},"vertices":["u","s","t"],)"
        R"("S":["s"],"T":["t"],"interface":["u"],)"
        R"("edges":[{"u":"s","v":"u","label":"1"},{"u":"u","v":"t","label":"0"}]})");
    // the same side, written in a different vertex order
    std::string b = write_tmp(
        "tb",
        R"({"group":{"kind":"cyclic","n":2},"vertices":["p","q","u"],)"
        R"("S":["p"],"T":["q"],"interface":["u"],)"
        R"("edges":[{"u":"p","v":"u","label":"1"},{"u":"u","v":"q","label":"0"}]})");
    // a different side: the non-null route avoids the interface
    std::string c = write_tmp(
        "tc",
        R"({"group":{"kind":"cyclic","n":2},"vertices":["u","s","t"],)"
        R"("S":["s"],"T":["t"],"interface":["u"],)"
        R"("edges":[{"u":"s","v":"t","label":"1"},{"u":"u","v":"t","label":"0"}]})");

    RunResult t = run("type", a);
    CHECK(t.code == 0);
    json tj = json::parse(t.out);
    CHECK(tj["r"] == 1);
    CHECK(tj.contains("universe_id"));
    CHECK(tj.contains("levels"));

    RunResult eq = run("type-eq " + a + " " + b);
    CHECK(eq.code == 0);
    json ej = json::parse(eq.out);
    CHECK(ej["equal"] == true);
    CHECK(ej["fingerprint_a"] == ej["fingerprint_b"]);

    RunResult ne = run("type-eq " + a + " " + c);
    CHECK(ne.code == 0);
    CHECK(json::parse(ne.out)["equal"] == false);

    // arity flag cross-check
    CHECK(run("type --r 2", a).code == 1);
}

TEST_CASE("gadget-search emits a valid catalog") {
    std::string group = write_tmp("g2", R"({"kind":"cyclic","n":2})");
    RunResult r = run("gadget-search --r 1 --nmax 2 --input " + group);
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["r"] == 1);
    CHECK(j["n_max"] == 2);
    CHECK(j["h"] == 2);
    CHECK(j["entries"].size() == 40);
    // deterministic
    RunResult again = run("gadget-search --r 1 --nmax 2 --input " + group);
    CHECK(again.out == r.out);
}

TEST_CASE("theorem1 with a prebuilt catalog") {
    RunResult r = run("theorem1 --k 1 --catalog " + catalog_file(),
                      single_edge_file());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["kind"] == "packing");
    CHECK(j["size"] == 1);
    CHECK(j["h"] == 4);
    REQUIRE(j["trace"].is_array());
    CHECK(j["trace"][0]["branch"] == "k1");
}

TEST_CASE("lemma6-audit runs green off the prebuilt catalog") {
    RunResult r =
        run("lemma6-audit --trials 3 --seed 2 --catalog " + catalog_file());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["completed"] == 3);
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] == 3);
}

TEST_CASE("unbreakable and prop4") {
    // 5-path: breakable with q=2,k=2
    std::string path5 = write_tmp(
        "p5",
        R"({"group":{"kind":"cyclic","n":2},"vertices":["a","b","c","d","e"],)"
        R"("S":["a"],"T":["e"],"edges":[{"u":"a","v":"b","label":"1"},)"
        R"({"u":"b","v":"c","label":"1"},{"u":"c","v":"d","label":"1"},)"
        R"({"u":"d","v":"e","label":"1"}]})");
    RunResult u = run("unbreakable --q 2 --k 2", path5);
    CHECK(u.code == 0);
    json uj = json::parse(u.out);
    CHECK(uj["unbreakable"] == false);
    REQUIRE(uj["witness"].is_object());
    CHECK(uj["witness"]["separator"].size() < 2);

    RunResult p = run("prop4 --q 2 --k 1", single_edge_file());
    CHECK(p.code == 0);
    json pj = json::parse(p.out);
    CHECK(pj["bound_ok"] == true);
    CHECK((pj["kind"] == "packing" || pj["kind"] == "hitting"));
}
