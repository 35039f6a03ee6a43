// End-to-end checks of the gframe binary: exit codes, report shape, and
// byte-identical report bodies across repeated runs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

#ifndef GFRAME_BIN
#error "GFRAME_BIN must point to the CLI executable"
#endif
#ifndef GFRAME_CONFIG_DIR
#error "GFRAME_CONFIG_DIR must point to the sample configs"
#endif

struct RunResult {
    int exit_code = -1;
    json report;
};

RunResult run(const std::string& args, const std::string& out_name) {
    const std::string out = std::string("/tmp/") + out_name;
    const std::string cmd =
        std::string(GFRAME_BIN) + " " + args + " --out " + out + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out);
    REQUIRE(in.good());
    in >> r.report;
    return r;
}

std::string config(const char* name) {
    return std::string("--config ") + GFRAME_CONFIG_DIR + "/" + name;
}

}  // namespace

TEST_CASE("verify command reports all suites passing") {
    const auto r = run("verify " + config("verify_all.json"), "verify_all.json");
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("body").at("summary").at("failed").get<int>() == 0);
    CHECK(r.report.at("body").at("checks").size() > 40);
    CHECK(r.report.contains("timings"));
}

TEST_CASE("verify selector narrows to one suite") {
    const auto r = run("verify " + config("verify_all.json") + " --seed 5",
                       "verify_oracle.json");
    CHECK(r.exit_code == 0);
    CHECK(r.report.at("body").at("seed").get<int>() == 5);
}

TEST_CASE("paradox command reproduces the four verdicts") {
    const auto r = run("paradox " + config("paradox.json"), "paradox.json");
    CHECK(r.exit_code == 0);
    const auto& body = r.report.at("body");
    CHECK(body.at("summary").at("failed").get<int>() == 0);
    CHECK(body.at("relational_trace_difference").get<double>() > 1e-3);
    CHECK(body.at("partial_trace_difference").get<double>() < 1e-12);
}

TEST_CASE("dynamics command emits traces and the scan witness") {
    const auto r = run("dynamics " + config("dynamics_n4.json"), "dynamics.json");
    CHECK(r.exit_code == 0);
    const auto& body = r.report.at("body");
    CHECK(body.at("summary").at("failed").get<int>() == 0);
    CHECK(body.at("relation_traces").size() == 5);
    // Probabilities stay normalized along the trace.
    for (const auto& point : body.at("relation_traces")) {
        double total = 0.0;
        for (const auto& p : point.at("relation_probabilities"))
            total += p.get<double>();
        CHECK(std::abs(total - 1.0) < 1e-9);
    }
    CHECK(body.at("equivalence_breaking_witness").is_object());
}

TEST_CASE("frames command aligns and hops") {
    const auto r = run("frames " + config("frames_example1.json"), "frames.json");
    CHECK(r.exit_code == 0);
    const auto& body = r.report.at("body");
    CHECK(body.at("summary").at("failed").get<int>() == 0);
    REQUIRE(body.at("frames").size() == 2);
    // Product relative to particle 1, maximally mixed marginal relative to 3.
    const double s1 = body.at("frames")[0].at("marginal_entropies")[0].get<double>();
    const double s3 = body.at("frames")[1].at("marginal_entropies")[0].get<double>();
    CHECK(s1 < 1e-9);
    CHECK(std::abs(s3 - std::log(2.0)) < 1e-9);
}

TEST_CASE("report bodies are byte-identical across runs") {
    for (const std::string sub : {"verify", "paradox", "dynamics", "frames"}) {
        const char* cfg = sub == "verify"     ? "verify_all.json"
                          : sub == "paradox"  ? "paradox.json"
                          : sub == "dynamics" ? "dynamics_n4.json"
                                              : "frames_example1.json";
        const auto a = run(sub + " " + config(cfg), "det_a.json");
        const auto b = run(sub + " " + config(cfg), "det_b.json");
        CHECK(a.report.at("body").dump() == b.report.at("body").dump());
    }
}

TEST_CASE("nonzero exit for failing checks and bad configs") {
    // Misaligned state request: not alignable -> error exit.
    const std::string bad = "/tmp/gframe_bad_config.json";
    {
        std::ofstream out(bad);
        out << R"({"group":[2],"particles":2,
                   "state":{"type":"superposition","terms":[
                     {"config":[0,0]},{"config":[1,1]}]},
                   "frames":[1]})";
    }
    const std::string cmd = std::string(GFRAME_BIN) + " frames --config " + bad +
                            " --out /tmp/gframe_bad_out.json >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);

    const int rc2 = std::system(
        (std::string(GFRAME_BIN) + " verify --config /nonexistent.json >/dev/null 2>&1")
            .c_str());
    CHECK(WEXITSTATUS(rc2) == 2);
}
