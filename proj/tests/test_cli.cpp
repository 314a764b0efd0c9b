#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kBin = SLC_CHECK_BIN;
const std::string kData = SLC_TEST_DATA;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = kBin + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char* name) { return kData + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check nlc on the counterexample exits 1 with the witness") {
    const Run r = run("check " + data("counterexample.json") + " nlc");
    CAPTURE(r.out);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "S={1} T={2}"));
    CHECK(contains(r.out, "9/484 < 12/484"));
}

TEST_CASE("check slc on the counterexample exits 0 with a dominance certificate") {
    const auto report = std::filesystem::temp_directory_path() / "slc_cli_report.json";
    const Run r = run("check " + data("counterexample.json") + " slc --report " + report.string());
    CAPTURE(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "derivative subset {}:\n  verdict: holds\n  certificate: strict diagonal dominance"));
    const auto doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["result"]["verdict"] == "holds");
    CHECK(doc["result"]["subsets"][0]["certificate"]["type"] == "diagonal-dominance");
}

TEST_CASE("normalize flag accepts the unnormalized body") {
    const Run r = run("check " + data("counterexample_body.json") + " nlc --normalize");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "9/484 < 12/484"));
    const Run raw = run("check " + data("counterexample_body.json") + " nlc");
    CHECK(raw.code == 1);
    CHECK(contains(raw.out, "9 < 12"));
}

TEST_CASE("exit codes") {
    CHECK(run("check " + data("product_measure.json") + " nlc").code == 0);
    CHECK(run("check " + data("product_measure.json") + " slc").code == 0);
    CHECK(run("check " + data("one_plus_xy.json") + " lc").code == 1);
    CHECK(run("check " + data("one_plus_xy.json") + " slc").code == 1);
    CHECK(run("check " + data("counterexample.json") + " lc").code == 0);

    const Run neg = run("check " + data("negative_weight.json") + " nlc");
    CHECK(neg.code == 2);
    CHECK(contains(neg.out, "negative"));
    CHECK(run("check " + data("missing.json") + " nlc").code == 2);
    CHECK(run("check " + data("counterexample.json") + " bogus").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("sweep --step 0 --out /tmp/slc_never").code == 2);
    CHECK(run("sweep --step abc --out /tmp/slc_never").code == 2);
}

TEST_CASE("repro-counterexample") {
    const Run r = run("repro-counterexample");
    CAPTURE(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "9/484 < 12/484"));
    CHECK(contains(r.out, "symbolic M = (3/484) * R"));
    CHECK(contains(r.out, "(3/484) * (6*y*z + 3*y + 3*z + 1)"));
    CHECK(contains(r.out, "at (1,1,1): {0, 0, 2}"));
    CHECK(contains(r.out, "all checks passed"));
}

TEST_CASE("sweep with unit step") {
    const auto dir = std::filesystem::temp_directory_path() / "slc_cli_sweep";
    std::filesystem::remove_all(dir);
    const Run r = run("sweep --step 1 --samples 200 --out " + dir.string());
    CAPTURE(r.out);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "cells: 25"));
    CHECK(contains(r.out, "nlc-true cells: 12"));
    CHECK(contains(r.out, "containment (nlc => slc-no-violation): passes"));
    CHECK(contains(r.out, "cell (3,3): nlc=false slc_no_violation=true"));
    CHECK(std::filesystem::exists(dir / "nlc_boundary.txt"));
    CHECK(std::filesystem::exists(dir / "slc_boundary.txt"));
    CHECK(slurp(dir / "sweep_full.csv").rfind("b,c,nlc,slc_no_violation\n", 0) == 0);

    const Run single = run("sweep --b-max 0 --c-max 0 --out " + dir.string());
    CHECK(single.code == 0);
    CHECK(contains(single.out, "cells: 1"));
    CHECK(contains(single.out, "nlc-true cells: 1"));
}

TEST_CASE("reports are deterministic") {
    const Run a = run("check " + data("one_plus_xy.json") + " slc --seed 5 --samples 300");
    const Run b = run("check " + data("one_plus_xy.json") + " slc --seed 5 --samples 300");
    CHECK(a.out == b.out);
    CHECK(run("repro-counterexample").out == run("repro-counterexample").out);

    const auto d1 = std::filesystem::temp_directory_path() / "slc_cli_det1";
    const auto d2 = std::filesystem::temp_directory_path() / "slc_cli_det2";
    run("sweep --step 0.5 --samples 100 --seed 3 --out " + d1.string());
    run("sweep --step 0.5 --samples 100 --seed 3 --out " + d2.string());
    for (const char* f : {"nlc_boundary.txt", "slc_boundary.txt", "sweep_full.csv"})
        CHECK(slurp(d1 / f) == slurp(d2 / f));
}
