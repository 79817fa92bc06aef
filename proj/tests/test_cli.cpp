#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the command-line binary: output formats, exit codes,
// and the documented round trips.  The binary path comes from the build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ORDLAT_CLI) + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ordlat_cli_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("dinv prints the exact invariant and rejects unknown orders") {
    CHECK(run("dinv --order eisenstein").out == "3/4\n");
    CHECK(run("dinv --order gaussian").out == "1\n");
    CHECK(run("dinv --order hurwitz").out == "1/4\n");
    CHECK(run("dinv --order j").out == "9/16\n");
    RunResult bad = run("dinv --order octonion 2>/dev/null");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("json errors are single-line json on stderr") {
    RunResult r = run("dinv --order octonion --format json 2>&1 1>/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find('\n') == r.out.size() - 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.contains("error"));
    CHECK(j.at("exitCode") == 2);
}

TEST_CASE("catalog list names all twelve entries") {
    RunResult r = run("catalog list");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 12);
    CHECK(r.out.find("L24/hurwitz\n") != std::string::npos);
}

TEST_CASE("catalog verify passes on a shipped entry and exits 1 on mismatch") {
    RunResult good = run("catalog verify A2/eisenstein --format json");
    CHECK(good.exit_code == 0);
    CHECK(nlohmann::json::parse(good.out).at("pass") == true);

    RunResult unknown = run("catalog verify A9/nowhere 2>/dev/null");
    CHECK(unknown.exit_code == 2);

    // A doctored sidecar must fail verification (exit 1), not error out.
    std::string d = "/tmp/ordlat_cli_doctored";
    REQUIRE(std::system(("rm -rf " + d + " && mkdir -p " + d).c_str()) == 0);
    REQUIRE(std::system(("cp " SOURCE_DATA_DIR "/catalog/A2_eisenstein.json "
                         SOURCE_DATA_DIR "/catalog/A2_eisenstein.expected.json " + d)
                            .c_str()) == 0);
    nlohmann::json sidecar = nlohmann::json::parse(slurp(d + "/A2_eisenstein.expected.json"));
    sidecar["min_norm"] = "7";
    std::ofstream(d + "/A2_eisenstein.expected.json") << sidecar.dump();
    RunResult doctored = [&] {
        std::string prefix = "ORDLAT_DATA_DIR=" + d + " ";
        std::string cmd = prefix + ORDLAT_CLI + " catalog verify A2/eisenstein 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        RunResult r;
        std::array<char, 4096> buf;
        std::size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
        int status = pclose(p);
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return r;
    }();
    CHECK(doctored.exit_code == 1);
    CHECK(doctored.out.find("FAIL") != std::string::npos);
    (void)std::system(("rm -rf " + d).c_str());
}

TEST_CASE("unicode and ascii catalog names agree") {
    RunResult uni = run("catalog verify Λ16/hurwitz --format json");
    RunResult ascii = run("catalog verify L16/hurwitz --format json");
    CHECK(uni.exit_code == 0);
    CHECK(uni.out == ascii.out);
}

TEST_CASE("lattice info reports exact invariants in every format") {
    TempFile f("d4.json");
    CHECK(run("catalog export D4/gaussian -o " + f.path).exit_code == 0);
    RunResult text = run("lattice info " + f.path);
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("det: 4\n") != std::string::npos);
    CHECK(text.out.find("minNorm: 2\n") != std::string::npos);
    CHECK(text.out.find("kissing: 24\n") != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(run("lattice info " + f.path + " --format json").out);
    CHECK(j.at("gammaNth") == "4");
    CHECK(j.at("gamma") == "1.41421");
    CHECK(j.at("kissing") == 24);
    RunResult csv = run("lattice info " + f.path + " --format csv");
    CHECK(csv.out.find("field,value\n") == 0);
    RunResult md = run("lattice info " + f.path + " --format markdown");
    CHECK(md.out.find("| field | value |") == 0);
}

TEST_CASE("dualizing twice returns the original file") {
    TempFile f("e6.json"), d1("e6_dual.json"), d2("e6_bidual.json");
    CHECK(run("catalog export E6/eisenstein -o " + f.path).exit_code == 0);
    CHECK(run("lattice dual " + f.path + " -o " + d1.path).exit_code == 0);
    CHECK(run("lattice dual " + d1.path + " -o " + d2.path).exit_code == 0);
    CHECK(nlohmann::json::parse(slurp(f.path)) == nlohmann::json::parse(slurp(d2.path)));
}

TEST_CASE("verify identities is deterministic and honours the seed") {
    TempFile f("e8.json");
    CHECK(run("catalog export E8/hurwitz -o " + f.path).exit_code == 0);
    std::string cmd = "verify identities " + f.path + " --trials 4 --seed 9 --format json";
    RunResult a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).at("pass") == true);
}

TEST_CASE("budget exhaustion exits with code 3") {
    TempFile f("e8b.json");
    CHECK(run("catalog export E8/hurwitz -o " + f.path).exit_code == 0);
    RunResult r = run("lattice info " + f.path + " --node-budget 10 2>/dev/null");
    CHECK(r.exit_code == 3);
}

TEST_CASE("mordell table markdown has the published column order") {
    RunResult r = run("mordell table --order hurwitz --max-dim 28 --bounds " SOURCE_DATA_DIR
                      "/bounds/ce-hurwitz.json --conjectured " SOURCE_DATA_DIR
                      "/bounds/conjectured-hurwitz.json --format md");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("| dimension | best known | Mordell bound | conjectured Mordell bound |") ==
          0);
    CHECK(r.out.find("4.42139") != std::string::npos);
    CHECK(r.out.find("4.21390") != std::string::npos);  // discrepancy annotation
    RunResult missing = run("mordell table --order hurwitz --max-dim 28 --bounds "
                            "/nonexistent.json 2>/dev/null");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("mordell step and obstruct answer from the command line") {
    RunResult step = run("mordell step --order hurwitz --m 4 --gamma 2^7/6");
    CHECK(step.exit_code == 0);
    CHECK(step.out.find("bound: 2^3/2\n") != std::string::npos);
    RunResult ob = run("mordell obstruct --order gaussian --m 4 --known 2 "
                       "--candidate 2^2/3 --format json");
    CHECK(ob.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(ob.out);
    CHECK(j.at("obstructed") == false);
    CHECK(j.at("rhs") == "2");
}
