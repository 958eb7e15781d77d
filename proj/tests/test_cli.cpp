#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Result {
    int code = -1;
    std::string out;
    Json json() const { return Json::parse(out); }
};

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "cornerstone-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

Result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + CLI_PATH + "\" " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, ConditionsOnA2) {
    Result r = run("conditions " + fixture("a2.alg") + " --e 2");
    ASSERT_EQ(r.code, 0) << r.out;
    Json j = r.json();
    EXPECT_EQ(j["schemaVersion"], 1);
    EXPECT_EQ(j["gamma"]["kind"], "finite");
    EXPECT_EQ(j["gamma"]["d"], 1);
    EXPECT_EQ(j["pss"], "holds");
    EXPECT_EQ(j["theoremB"]["equivalence"], "yes");
    EXPECT_EQ(run("conditions " + fixture("a2.alg") + " --e E2").out, r.out);
}

TEST(Cli, ValidateExitCodes) {
    EXPECT_EQ(run("validate " + fixture("bad.alg")).code, 2);
    Result bad = run("validate " + fixture("bad_syntax.alg"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_EQ(bad.json()["kind"], "ParseError");
    Result ok = run("validate " + fixture("a2.alg"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.json()["algebra"]["dim"], 3);
    EXPECT_EQ(run("validate").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("conditions " + fixture("a2.alg") + " --e 9").code, 2);
}

TEST(Cli, NakayamaLemmas) {
    Result r = run("corpus --family nakayama --n 3 --radPower 2 --run lemmas");
    ASSERT_EQ(r.code, 0);
    Json j = r.json();
    EXPECT_EQ(j["violations"], 0);
    for (const auto& s : j["suites"]) {
        EXPECT_EQ(s["violations"], 0) << s["suite"];
        if (s["suite"] == "ext-vs-resolution-terms" || s["suite"] == "add-membership") {
            EXPECT_GT(s["checks"].get<int>(), 0);
        }
    }
}

TEST(Cli, OnePointRoundTrip) {
    auto out = scratch("dd_constructed.alg");
    Result c = run("construct one-point " + fixture("d.alg") + " --module D -o " + out.string());
    ASSERT_EQ(c.code, 0) << c.out;
    EXPECT_EQ(c.json()["algebra"]["dim"], 5);
    Result a = run("analyze " + out.string());
    Result b = run("analyze " + fixture("dd.alg"));
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Json j = a.json();
    EXPECT_EQ(j["vertexData"][0]["pdSimple"]["d"], 1);
    EXPECT_EQ(j["vertexData"][1]["pdSimple"]["kind"], "atLeast");
    EXPECT_EQ(j["vertexData"][1]["pdSimple"]["cutoff"], 20);
}

TEST(Cli, ConstructTriangular) {
    auto out = scratch("a2_d.alg");
    Result c = run("construct triangular " + fixture("a2.alg") + " " + fixture("d.alg") + " --bimodule " + fixture("a2_d.bim") +
                " -o " + out.string());
    ASSERT_EQ(c.code, 0) << c.out;
    EXPECT_EQ(c.json()["algebra"]["dim"], 7);
    Result v = run("validate " + out.string());
    EXPECT_EQ(v.code, 0);
    Result e = run("equiv " + out.string() + " --e S:1 --max-syzygy 12");
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.json()["consistent"], true);
}

TEST(Cli, CutoffOverride) {
    Result r = run("analyze " + fixture("d.alg"), "CORNERSTONE_CUTOFF=6");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["cutoff"], 6);
    EXPECT_EQ(r.json()["globalDimension"]["cutoff"], 6);
    Result flag = run("analyze " + fixture("d.alg") + " --cutoff 4", "CORNERSTONE_CUTOFF=6");
    EXPECT_EQ(flag.json()["cutoff"], 4);
    EXPECT_EQ(run("analyze " + fixture("d.alg"), "CORNERSTONE_CUTOFF=abc").code, 2);
}

TEST(Cli, EquivOnOnePointExtension) {
    Result r = run("equiv " + fixture("dd.alg") + " --e S:1 --max-syzygy 40 --window 5");
    ASSERT_EQ(r.code, 0);
    Json j = r.json();
    EXPECT_EQ(j["consistent"], true);
    EXPECT_EQ(j["theoremB"]["equivalence"], "yes");
    for (const auto& p : j["pairs"]) EXPECT_EQ(p["lhs"], p["rhs"]);
}

TEST(Cli, CorpusIsDeterministic) {
    std::string args = "corpus --family randomAdmissible --seed 7 --count 2 --run conditions";
    Result a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.json()["cases"].empty());
}

TEST(Cli, PrettyOutputParsesToSameJson) {
    Result a = run("analyze " + fixture("a2.alg"));
    Result b = run("--pretty analyze " + fixture("a2.alg"));
    ASSERT_EQ(b.code, 0);
    EXPECT_NE(a.out, b.out);
    EXPECT_EQ(a.json(), b.json());
}

TEST(Cli, SelfInjectiveFamily) {
    Result r = run("corpus --family selfInjective --n 1 --run conditions");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["cases"][0]["dim"], 1);
}
