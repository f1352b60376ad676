#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <ncsylv/cli.hpp>

using namespace ncsylv;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify sylvester, cf, m = 3, n = 1, N = 5") {
    auto r = run({"verify", "--identity", "sylvester", "--regime", "cf", "--m", "3", "--n", "1", "--max-degree", "5"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("json report has the fixed key order and round-trips") {
    auto r = run({"verify", "--identity", "sylvester", "--regime", "q-rq", "--m", "3", "--n", "1", "--max-degree", "3",
                  "--format", "json", "--seed", "7"});
    REQUIRE(r.code == kExitPass);
    auto j = ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"identity", "regime", "m", "n", "max_degree", "method", "seed", "degrees",
                                           "elapsed_ms", "pass"});
    CHECK(j["method"] == "ideal-specialize");
    CHECK(j["seed"] == 7);
    CHECK(j["degrees"].size() == 4);
    CHECK(j["degrees"][3]["verdict"] == "probably-in-ideal");
    CHECK(to_json(report_from_json(j)).dump(2) + "\n" == r.out);
}

TEST_CASE("json round trip with witnesses and notes") {
    VerifyReport rep;
    rep.identity = "inverse";
    rep.regime = "q-cf";
    rep.m = 2;
    rep.max_degree = 2;
    rep.method = "normal-form";
    rep.seed = 3;
    rep.degrees.push_back({0, 1, Verdict::in_ideal, false, {}});
    rep.degrees.push_back({1, 0, Verdict::probably_in_ideal, true, {}});
    rep.degrees.push_back({2, 2, Verdict::not_in_ideal, false, {{Word::parse("a12a22"), "-q + 1"}}});
    rep.elapsed_ms = 0.125;
    rep.notes = {"entry (1,2)"};
    rep.finish();
    CHECK(!rep.pass);
    std::string text = to_json(rep).dump();
    auto back = report_from_json(ordered_json::parse(text));
    CHECK(to_json(back).dump() == text);
    CHECK(back.degrees[2].witness[0].first == Word::parse("a12a22"));
    CHECK(back.degrees[1].trials_disagreed);
    CHECK(text.find("\"witness\":[{\"word\":\"a[1,2]a[2,2]\",\"coefficient\":\"-q + 1\"}]") != std::string::npos);
}

TEST_CASE("failing verification exits 1 and prints the witness") {
    auto r = run({"verify", "--identity", "inverse", "--regime", "q-cf", "--m", "2", "--i", "1", "--j", "2",
                  "--max-degree", "3"});
    CHECK(r.code == kExitFail);
    CHECK(r.err.find("witness") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "--regime", "nope"}).code == kExitUsage);
    CHECK(run({"verify", "--m", "9"}).code == kExitUsage);
    CHECK(run({"verify", "--m", "3", "--n", "3"}).code == kExitUsage);
    CHECK(run({"verify", "--identity", "bogus"}).code == kExitUsage);
    CHECK(run({"verify", "--method", "magic"}).code == kExitUsage);
    CHECK(run({"verify", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"verify", "--regime", "rq", "--method", "normal-form"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"emu"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("counterexample reports both coefficients") {
    auto r = run({"verify", "--identity", "counterexample"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("lhs -q[1,2]^-1*q[1,3]^-1, rhs -q[1,2]^-2") != std::string::npos);
    CHECK(r.out.find("expected failure confirmed") != std::string::npos);
    auto j = run({"verify", "--identity", "counterexample", "--format", "json"});
    auto arr = ordered_json::parse(j.out);
    REQUIRE(arr.is_array());
    CHECK(arr[0]["pass"] == false);
    CHECK(arr[1]["pass"] == true);
}

TEST_CASE("emu, decompose and phi commands") {
    auto e = run({"emu", "--mu", "132521421325", "--n", "2"});
    CHECK(e.code == kExitPass);
    CHECK(e.out == "1/8*b^4 + 5/12*b^3 + 3/8*b^2 + 1/12*b\n");
    auto d = run({"decompose", "--word", "a41a13a32a22a25a54a43a33a33a31a14a44", "--n", "3"});
    CHECK(d.out == "a[4,1]a[1,3]a[3,2]a[2,2]a[2,5]\na[5,4]\na[4,3]a[3,3]a[3,3]a[3,1]a[1,4]\na[4,4]\n");
    auto p = run({"phi", "--word", "a11a13a12a25a22a21a24a32a31a43a52a55", "--n", "2"});
    CHECK(p.code == kExitPass);
    CHECK(p.out.find("cycles: (a[1,1])(a[2,5]a[5,2])(a[2,2])") != std::string::npos);
    CHECK(run({"decompose", "--word", "a12a13", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("det and cmatrix commands") {
    auto d = run({"det", "--regime", "q-cf", "--m", "2", "--max-degree", "2"});
    CHECK(d.code == kExitPass);
    CHECK(d.out.find("a[1,1]a[2,2] - q^-1*a[2,1]a[1,2]") != std::string::npos);
    auto c = run({"cmatrix", "--regime", "cf", "--m", "2", "--n", "1", "--max-degree", "2", "--reduce"});
    CHECK(c.code == kExitPass);
    CHECK(c.out.find("c[2,2]:") != std::string::npos);
    CHECK(c.out.find("a[1,2]a[2,1]") != std::string::npos);
}

TEST_CASE("output file") {
    std::string path = "ncsylv_cli_test_report.json";
    auto r = run({"verify", "--identity", "c-relations", "--regime", "cf", "--m", "3", "--max-degree", "3", "--format",
                  "json", "--output", path});
    CHECK(r.code == kExitPass);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    auto j = ordered_json::parse(buf.str());
    CHECK(j["identity"] == "c-relations");
    CHECK(j["pass"] == true);
    std::remove(path.c_str());
}

TEST_CASE("inverse without indices runs every entry") {
    auto r = run({"verify", "--identity", "inverse", "--regime", "cf", "--m", "2", "--max-degree", "3", "--format", "json"});
    CHECK(r.code == kExitPass);
    CHECK(ordered_json::parse(r.out).size() == 4);
}
