#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string binary() {
    const char* bin = std::getenv("EQARG_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "EQARG_BIN must point at the CLI binary");
    return bin;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// One gallery run shared by every test in this binary.
const std::string& fixtures() {
    static std::string dir = [] {
        fs::path d = fs::temp_directory_path() / "eqarg_cli_fixtures";
        fs::remove_all(d);
        auto r = run("gallery " + d.string());
        REQUIRE_MESSAGE(r.exit_code == 0, r.output);
        return d.string();
    }();
    return dir;
}

}  // namespace

TEST_CASE("gallery writes fixtures and reports a clean run") {
    auto r = run("gallery " + fixtures());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("gallery clean") != std::string::npos);
    CHECK(fs::exists(fs::path(fixtures()) / "fig3.af"));
    CHECK(fs::exists(fs::path(fixtures()) / "summary.json"));
}

TEST_CASE("checked-in fixtures match the generated ones") {
    const char* repo = std::getenv("EQARG_REPO_FIXTURES");
    REQUIRE(repo != nullptr);
    for (const char* name :
         {"fig3.af", "fig4.af", "fig7.af", "fig9.af", "fig11.af", "fig16.af", "fig22.af",
          "fig25.af", "fig26.af", "fig30.af", "fig13a.af", "fig7_distribution.json",
          "fig9_distribution.json", "fig11_uniform.json", "fig16_p2.json",
          "fig22_asymmetric.json"}) {
        std::ifstream a(fs::path(repo) / name), b(fs::path(fixtures()) / name);
        REQUIRE_MESSAGE(a.good(), name);
        REQUIRE_MESSAGE(b.good(), name);
        std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
        std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
        CHECK_MESSAGE(sa == sb, name);
    }
}

TEST_CASE("solve reports the golden values with projections") {
    auto r = run("solve inv " + fixtures() + "/fig4.af");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["solutions"].size() == 1);
    CHECK(std::abs(j["solutions"][0]["values"]["a"].get<double>() - 0.2360679) < 1e-6);
    CHECK(std::abs(j["solutions"][0]["values"]["b"].get<double>() - 0.3819660) < 1e-6);
    CHECK(j["solutions"][0]["labelling"]["a"] == "und");
    CHECK(j["solutions"][0]["is_preferred_candidate"] == true);
}

TEST_CASE("solve inv on fig3 finds the single decided solution") {
    auto r = run("solve inv " + fixtures() + "/fig3.af");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["solutions"].size() == 1);
    CHECK(j["solutions"][0]["values"]["a"].get<double>() == 0.0);
    CHECK(j["solutions"][0]["values"]["b"].get<double>() == 1.0);
}

TEST_CASE("exact max solve lists both fig3 solutions") {
    auto r = run("solve max " + fixtures() + "/fig3.af --exact");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["exact_solutions"].size() == 2);
}

TEST_CASE("extensions tags complete, preferred and grounded labellings") {
    auto r = run("extensions " + fixtures() + "/fig3.af");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["count"] == 2);
    int preferred = 0, grounded = 0;
    for (const auto& e : j["complete"]) {
        if (e["preferred"].get<bool>()) ++preferred;
        if (e["grounded"].get<bool>()) ++grounded;
    }
    CHECK(preferred == 1);
    CHECK(grounded == 1);

    auto fig9 = run("extensions " + fixtures() + "/fig9.af");
    CHECK(nlohmann::json::parse(fig9.output)["count"] == 3);
}

TEST_CASE("method2 check rejects the fig7 distribution with a nonzero exit") {
    auto r = run("method2 check " + fixtures() + "/fig7.af " + fixtures() +
                 "/fig7_distribution.json");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["legitimate"] == false);
    CHECK(j["defects"]["a3"] == "-3/20");
}

TEST_CASE("method2 plambda emits the two-model construction") {
    auto r = run("method2 plambda " + fixtures() + "/fig3.af --label a=und,b=und");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["masses"].size() == 2);
    CHECK(j["masses"][0]["mass"] == "1/2");
}

TEST_CASE("method2 find honors pins and reports infeasibility") {
    auto ok = run("method2 find " + fixtures() + "/fig11.af --pin \"a & b=0\" --pin \"!a & b=1/3\"");
    REQUIRE(ok.exit_code == 0);
    CHECK(nlohmann::json::parse(ok.output)["feasible"] == true);

    auto bad = run("method2 find " + fixtures() + "/fig22.af --pin x1=1/4 --pin x2=0");
    CHECK(bad.exit_code == 1);
    auto j = nlohmann::json::parse(bad.output);
    CHECK(j["feasible"] == false);
    CHECK(j.contains("certificate"));
}

TEST_CASE("method2 gr-label labels the joint-attack witness") {
    auto r = run("method2 gr-label " + fixtures() + "/fig16.af " + fixtures() + "/fig16_p2.json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["labels"]["x"] == "out");
    CHECK(j["labels"]["a"] == "und");
}

TEST_CASE("method1 check verdicts drive the exit code") {
    auto good = run("method1 check " + fixtures() + "/fig3.af a=0,b=1 --exact");
    CHECK(good.exit_code == 0);
    auto bad = run("method1 check " + fixtures() + "/fig3.af a=1/2,b=1/2");
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.output)["defects"]["a"] == "1/4");
}

TEST_CASE("thimm reports both verdicts") {
    auto r = run("thimm " + fixtures() + "/fig7.af " + fixtures() + "/fig7_distribution.json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["p_justifiable"] == false);
    CHECK(j["method2_legitimate"] == false);

    auto mixed =
        run("thimm " + fixtures() + "/fig22.af " + fixtures() + "/fig22_asymmetric.json");
    auto jm = nlohmann::json::parse(mixed.output);
    CHECK(jm["p_justifiable"] == true);
    CHECK(jm["method2_legitimate"] == false);
}

TEST_CASE("approximate reproduces the ninths table") {
    auto r = run("approximate " + fixtures() + "/fig25.af --label a=in,b=out,c=und,d=und --n 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["exact"] == true);
    CHECK(j["und_solution"]["c"] == "1/3");
    CHECK(j["und_solution"]["u"] == "1/2");
}

TEST_CASE("instantiate accepts a formula map") {
    fs::path map = fs::temp_directory_path() / "eqarg_cli_inst.json";
    std::ofstream(map) << R"({"x": "a1 | a2", "a3": "a3"})";
    auto r = run("instantiate " + fixtures() + "/fig13a.af " + map.string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["result"]["feasible"] == true);
    CHECK(j["universe"].size() == 3);
}

TEST_CASE("export-dot renders the graph") {
    auto r = run("export-dot " + fixtures() + "/fig3.af --values a=0,b=1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("digraph af") != std::string::npos);
    CHECK(r.output.find("\"b\" [label=\"b\\n[1]\"]") != std::string::npos);
}

TEST_CASE("errors exit nonzero with a message") {
    auto missing = run("solve inv /nonexistent.af");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("error:") != std::string::npos);

    fs::path bad = fs::temp_directory_path() / "eqarg_cli_bad.af";
    std::ofstream(bad) << "arg a\natt a b\n";
    auto parse = run("solve inv " + bad.string());
    CHECK(parse.exit_code == 1);
    CHECK(parse.output.find("line 2") != std::string::npos);
}

TEST_CASE("a loosened solver tolerance makes the gallery fail") {
    fs::path dir = fs::temp_directory_path() / "eqarg_cli_loose";
    auto r = run("gallery " + dir.string() + " --tol 1e-2");
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("text format renders human-readable output") {
    auto r = run("extensions " + fixtures() + "/fig3.af --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("[preferred]") != std::string::npos);
    CHECK(r.output.find("[grounded]") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
    fs::path out = fs::temp_directory_path() / "eqarg_cli_out.json";
    fs::remove(out);
    auto r = run("extensions " + fixtures() + "/fig3.af -o " + out.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    auto j = nlohmann::json::parse(in);
    CHECK(j["count"] == 2);
}
