#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("HOPFORE_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("'") + bin + "' " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    return {WEXITSTATUS(st), out};
}

std::string data_dir() {
    const char* d = std::getenv("HOPFORE_DATA");
    REQUIRE(d != nullptr);
    return d;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string emit_to_tmp(const std::string& name, const std::string& extra = "") {
    std::string path = "cli_tmp_" + name + ".txt";
    RunResult r = run("catalog emit " + name + " " + extra + " --out " + path);
    REQUIRE(r.code == 0);
    return path;
}

} // namespace

TEST_CASE("catalog list and verify-all") {
    RunResult l = run("catalog list");
    CHECK(l.code == 0);
    CHECK(l.out.find("group-z") != std::string::npos);
    CHECK(l.out.find("half-quantum-serre") != std::string::npos);

    RunResult v = run("catalog verify-all --format json");
    CHECK(v.code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["schema"] == 1);
    CHECK(j["verdict"] == "Pass");
    CHECK(j["entries"].size() == 57);
}

TEST_CASE("check-ghoe on a passing and a failing instance") {
    std::string good = emit_to_tmp("group-z");
    RunResult rg = run("check-ghoe " + good + " --format json");
    CHECK(rg.code == 0);
    auto jg = nlohmann::json::parse(rg.out);
    CHECK(jg["verdict"] == "Pass");
    CHECK(jg["command"] == "check-ghoe");
    CHECK(jg["inputs"][0] == good);
    CHECK(jg["notes"]["classification"] == "A (no middle term)");
    CHECK(jg["digest"].get<std::string>().size() == 16);

    std::string badf = emit_to_tmp("half-quantum-literal", "--q 2");
    RunResult rb = run("check-ghoe " + badf + " --format json");
    CHECK(rb.code == 1);
    auto jb = nlohmann::json::parse(rb.out);
    CHECK(jb["verdict"] == "Fail");
    bool found = false;
    for (const auto& e : jb["entries"])
        if (e["check"] == "B2" && e["subject"] == "E1" && e["pass"] == false)
            found = true;
    CHECK(found);

    // identical invocations give byte-identical reports
    CHECK(run("check-ghoe " + good + " --format json").out == rg.out);
}

TEST_CASE("emit --q equals emitting the specialized entry") {
    RunResult a = run("catalog emit half-quantum-literal --q 2");
    RunResult b = run("catalog emit half-quantum-literal-q2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("check-hopf, check-presentation and ore-extend") {
    std::string f = emit_to_tmp("half-quantum-serre");
    CHECK(run("check-hopf " + f).code == 0);
    CHECK(run("check-presentation " + f).code == 0);

    std::string g = emit_to_tmp("line-linear");
    RunResult r = run("ore-extend " + g);
    CHECK(r.code == 0);
    CHECK(r.out.find("z*a") != std::string::npos);

    RunResult d = run("derive-chi " + g);
    CHECK(d.code == 0);
    CHECK(d.out.find("chi.a: 0") != std::string::npos);
}

TEST_CASE("solve-delta-eq") {
    std::string f = emit_to_tmp("line-zero");
    RunResult s = run("solve-delta-eq " + f + " --rhs 'a (x) a' --format json");
    CHECK(s.code == 0);
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["verdict"] == "Solved");
    CHECK(j["notes"]["particular"] == "(1/2)*a^2");

    RunResult n = run("solve-delta-eq " + f + " --rhs 'a (x) 1'");
    CHECK(n.code == 1);
    CHECK(n.out.find("NoSolution") != std::string::npos);
}

TEST_CASE("iso commands against the shipped example pair") {
    std::string a = data_dir() + "/line-delta5.ghoe";
    std::string b = data_dir() + "/line-delta1-witness.ghoe";
    CHECK(run("check-iso " + a + " " + b).code == 0);

    RunResult s = run("solve-iso-1dim " + a + " " + b);
    CHECK(s.code == 0);
    CHECK(s.out.find("lambda: 5") != std::string::npos);

    std::string zero = emit_to_tmp("line-zero");
    std::string lin = emit_to_tmp("line-linear");
    RunResult n = run("solve-iso-1dim " + zero + " " + lin);
    CHECK(n.code == 1);
    CHECK(n.out.find("NoSolution") != std::string::npos);
}

TEST_CASE("shipped data files match fresh emission") {
    for (const char* name :
         {"line-linear", "group-z", "env2-quadratic", "p3-powers",
          "half-quantum-literal"}) {
        CAPTURE(name);
        RunResult r = run(std::string("catalog emit ") + name);
        REQUIRE(r.code == 0);
        CHECK(slurp(data_dir() + "/" + name + ".ghoe") == r.out);
    }
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run("catalog emit no-such-entry").code == 2);
    CHECK(run("check-ghoe /nonexistent/file").code == 2);
    std::string badpath = "cli_tmp_bad.txt";
    {
        std::ofstream out(badpath);
        out << "[field]\nkind = Q\nbogus = 1\n";
    }
    RunResult r = run("check-ghoe " + badpath);
    CHECK(r.code == 2);
    CHECK(r.out.find("SyntaxError") != std::string::npos);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("--help").code == 0);
}
