#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "turanlab/constructions.hpp"
#include "turanlab/graph6.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("turanlab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

RunResult run_cli(const TempDir& dir, const std::string& args, const std::string& stdin_text = "") {
    const fs::path out = dir.path / "stdout.txt";
    const fs::path err = dir.path / "stderr.txt";
    const fs::path cache = dir.path / "cache";
    std::string cmd = "TURANLAB_CACHE='" + cache.string() + "' '" + TURANLAB_CLI_PATH + "' " + args;
    if (!stdin_text.empty()) {
        const fs::path in = dir.path / "stdin.txt";
        std::ofstream(in, std::ios::binary) << stdin_text;
        cmd += " < '" + in.string() + "'";
    } else {
        cmd += " < /dev/null";
    }
    cmd += " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

json load_report_without_timings(const fs::path& p) {
    json doc = json::parse(slurp(p));
    doc.erase("timings");
    return doc;
}

}  // namespace

TEST_CASE("construct emits graph6") {
    TempDir dir;
    auto r = run_cli(dir, "construct turan --r 2 --n 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == turanlab::encode_graph6(turanlab::turan(2, 9)) + "\n");

    auto k3 = run_cli(dir, "construct complete --n 3");
    CHECK(k3.exit_code == 0);
    CHECK(k3.out == "Bw\n");

    auto e0 = run_cli(dir, "construct empty --n 0");
    CHECK(e0.exit_code == 0);
    CHECK(e0.out == "?\n");
}

TEST_CASE("construct pipes into count") {
    TempDir dir;
    auto g = run_cli(dir, "construct extremal --ell 2 --n 10");
    REQUIRE(g.exit_code == 0);
    auto t = run_cli(dir, "count --what triangles", g.out);
    CHECK(t.exit_code == 0);
    CHECK(t.out == "40\n");

    auto ept = run_cli(dir, "count --what e_plus_t", run_cli(dir, "construct turan --r 2 --n 10").out);
    CHECK(ept.out == "25\n");

    const std::string c5_g6 = turanlab::encode_graph6(turanlab::cycle_graph(5));
    auto c5 = run_cli(dir, "count --what cycles:5",
                      run_cli(dir, "construct blowup --base '" + c5_g6 + "' --sizes 2,2,2,2,2").out);
    CHECK(c5.exit_code == 0);
    CHECK(c5.out == "32\n");
}

TEST_CASE("check reports packings and freeness through exit codes") {
    TempDir dir;
    auto packed = run_cli(dir, "check --copies 2 --cycle-len 3",
                          run_cli(dir, "construct complete --n 6").out);
    CHECK(packed.exit_code == 1);
    CHECK(packed.out.substr(0, 7) == "PACKING");

    auto free = run_cli(dir, "check --copies 1 --cycle-len 5",
                        run_cli(dir, "construct turan --r 2 --n 10").out);
    CHECK(free.exit_code == 0);
    CHECK(free.out == "FREE\n");
}

TEST_CASE("enumerate writes and reuses the census cache") {
    TempDir dir;
    const fs::path first = dir.path / "a.g6";
    const fs::path second = dir.path / "b.g6";
    auto r1 = run_cli(dir, "enumerate --n 6 --out '" + first.string() + "'");
    REQUIRE(r1.exit_code == 0);
    const std::string text1 = slurp(first);
    CHECK(std::count(text1.begin(), text1.end(), '\n') == 156);

    // cache file exists and matches
    const fs::path cached = dir.path / "cache" / "census_n6.g6";
    REQUIRE(fs::exists(cached));
    CHECK(slurp(cached) == text1);
    REQUIRE(fs::exists(dir.path / "cache" / "manifest.json"));
    const json manifest = json::parse(slurp(dir.path / "cache" / "manifest.json"));
    CHECK(manifest["entries"]["census_n6.g6"]["count"] == 156);

    // a second run is served from the cache, bit-identical
    auto r2 = run_cli(dir, "enumerate --n 6 --out '" + second.string() + "'");
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(second) == text1);

    // filtered census carries the family in its name
    const fs::path filtered = dir.path / "c.g6";
    auto r3 = run_cli(dir,
                      "enumerate --n 5 --free-copies 1 --free-cycle-len 3 --out '" +
                          filtered.string() + "'");
    REQUIRE(r3.exit_code == 0);
    CHECK(fs::exists(dir.path / "cache" / "census_n5_free_1x3.g6"));

    auto bad = run_cli(dir, "enumerate --n 5 --free-copies 1 --out '" + second.string() + "'");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify writes deterministic reports") {
    TempDir dir;
    const fs::path report1 = dir.path / "r1.json";
    const fs::path report2 = dir.path / "r2.json";
    auto r1 = run_cli(dir, "verify furedi-gunderson --k 2 --n-from 6 --n-to 9 --report '" +
                               report1.string() + "'");
    CHECK(r1.exit_code == 0);
    auto r2 = run_cli(dir, "verify furedi-gunderson --k 2 --n-from 6 --n-to 9 --report '" +
                               report2.string() + "'");
    CHECK(r2.exit_code == 0);
    const json doc1 = load_report_without_timings(report1);
    const json doc2 = load_report_without_timings(report2);
    CHECK(doc1 == doc2);
    CHECK(doc1["schema_version"] == "1");
    CHECK(doc1["summary"]["all_equal"] == true);
    for (const auto& rec : doc1["records"]) CHECK(rec["equals_bound"] == true);
}

TEST_CASE("verify main reports the small-n disagreement") {
    TempDir dir;
    const fs::path report = dir.path / "main.json";
    auto r = run_cli(dir,
                     "verify main --ell 1 --k 1 --n-from 4 --n-to 7 --report '" + report.string() +
                         "'");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(slurp(report));
    CHECK(doc["records"][0]["n"] == 4);
    CHECK(doc["records"][0]["exact"] == 4);
    CHECK(doc["records"][0]["formula"] == 2);
    CHECK(doc["records"][0]["matches_formula"] == false);
    CHECK(doc["summary"]["construction_feasible"] == true);
}

TEST_CASE("verify lemma reports violations without failing") {
    TempDir dir;
    auto r = run_cli(dir, "verify lemma --k 2 --n-from 5 --n-to 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("11") != std::string::npos);
}

TEST_CASE("usage, budget and parse failures use distinct exit codes") {
    TempDir dir;
    CHECK(run_cli(dir, "frobnicate").exit_code == 2);
    CHECK(run_cli(dir, "count --what nonsense", "Bw\n").exit_code == 2);
    CHECK(run_cli(dir, "--help").exit_code == 0);

    const fs::path out = dir.path / "x.g6";
    CHECK(run_cli(dir, "enumerate --n 12 --out '" + out.string() + "'").exit_code == 3);

    auto parse = run_cli(dir, "count --what edges", "B\n");
    CHECK(parse.exit_code == 2);
    CHECK(parse.err.find("byte 1") != std::string::npos);
}

TEST_CASE("time limit enforces exit code 3") {
    TempDir dir;
    auto r = run_cli(dir, "--time-limit 0.05 --no-cache enumerate --n 8 --out '" +
                              (dir.path / "t.g6").string() + "'");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("time budget") != std::string::npos);
}
