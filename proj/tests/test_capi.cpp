// Exercises the shared-library C API and the CLI binary built on top of it.

#include "hopfq/hopfq.h"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string data_path(const std::string& name) { return std::string(HOPFQ_DATA_DIR) + "/" + name; }

struct Session {
    hopfq_session* s = hopfq_session_create();
    ~Session() { hopfq_session_destroy(s); }
};

struct Report {
    hopfq_report* r = nullptr;
    ~Report() { hopfq_report_destroy(r); }
};

int run_cli(const std::string& args) {
    std::string cmd = std::string(HOPFQ_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("version string") {
    CHECK(std::string(hopfq_version()).find("hopfq") != std::string::npos);
}

TEST_CASE("load and verify through the C API") {
    Session session;
    REQUIRE(hopfq_load_file(session.s, data_path("kz2.struct").c_str(), 0) == HOPFQ_OK);

    Report report;
    CHECK(hopfq_run_verify(session.s, "whq", &report.r) == HOPFQ_OK);
    CHECK(hopfq_report_passed(report.r) == 1);
    std::string text = hopfq_report_text(report.r);
    CHECK(text.find("(a1)") != std::string::npos);
    std::string json = hopfq_report_json(report.r);
    CHECK(json.find("hopfq.report/v1") != std::string::npos);
}

TEST_CASE("error paths through the C API") {
    Session session;
    CHECK(hopfq_load_file(session.s, "/nonexistent.struct", 0) == HOPFQ_ERR_INPUT);
    CHECK(std::string(hopfq_last_error(session.s)).size() > 0);

    CHECK(hopfq_load_string(session.s, "{ broken", 0) == HOPFQ_ERR_INPUT);

    hopfq_report* report = nullptr;
    Session fresh;
    CHECK(hopfq_run_verify(fresh.s, "whq", &report) == HOPFQ_ERR_USAGE);

    REQUIRE(hopfq_load_file(session.s, data_path("kz2.struct").c_str(), 0) == HOPFQ_OK);
    CHECK(hopfq_run_verify(session.s, "no-such-suite", &report) == HOPFQ_ERR_INPUT);
}

TEST_CASE("fundamental and equivalence through the C API") {
    Session session;
    REQUIRE(hopfq_load_file(session.s, data_path("pair_groupoid.struct").c_str(), 0) == HOPFQ_OK);
    {
        Report report;
        CHECK(hopfq_run_fundamental(session.s, &report.r) == HOPFQ_OK);
        std::string json = hopfq_report_json(report.r);
        CHECK(json.find("\"dim(M^co)\": 2") != std::string::npos);
        CHECK(json.find("\"omega_invertible\": true") != std::string::npos);
    }
    {
        Report report;
        CHECK(hopfq_run_equivalence(session.s, &report.r) == HOPFQ_OK);
        std::string json = hopfq_report_json(report.r);
        CHECK(json.find("\"corollary_class\": \"(ii)\"") != std::string::npos);
    }
}

TEST_CASE("a corrupted structure yields check failure, not input error") {
    std::string text = slurp(data_path("kz2.struct"));
    // Damage one matrix entry of lambda: "lambda": [["0","1"],["1","0"]].
    auto pos = text.find("\"lambda\"");
    REQUIRE(pos != std::string::npos);
    pos = text.find("\"0\"", pos);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"7\"");

    Session session;
    REQUIRE(hopfq_load_string(session.s, text.c_str(), 0) == HOPFQ_OK);
    Report report;
    CHECK(hopfq_run_verify(session.s, "whq", &report.r) == HOPFQ_CHECK_FAILED);
    CHECK(hopfq_report_passed(report.r) == 0);
    CHECK(std::string(hopfq_report_text(report.r)).find("witness") != std::string::npos);
}

TEST_CASE("a module with a broken action fails naming a (d2-*) axiom") {
    std::string text = slurp(data_path("kz2.struct"));
    // Damage a zero entry inside the module action phi.
    auto pos = text.find("\"phi\"");
    REQUIRE(pos != std::string::npos);
    pos = text.find("\"0\"", pos);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"5\"");

    Session session;
    REQUIRE(hopfq_load_string(session.s, text.c_str(), 0) == HOPFQ_OK);
    Report report;
    CHECK(hopfq_run_fundamental(session.s, &report.r) == HOPFQ_CHECK_FAILED);
    std::string out = hopfq_report_text(report.r);
    CHECK(out.find("(d2-") != std::string::npos);
    CHECK(out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("CLI exit codes and output") {
    CHECK(run_cli("verify " + data_path("kz2.struct") + " --suite whq") == 0);
    CHECK(run_cli("verify " + data_path("octonion.struct") + " --suite hopf-quasigroup") == 0);
    CHECK(run_cli("verify " + data_path("pair_groupoid.struct") + " --suite hopf-quasigroup") == 1);
    CHECK(run_cli("verify " + data_path("kz2.struct") + " --suite whq --json") == 0);
    CHECK(run_cli("verify " + data_path("kz2.struct") + " --suite lemma22") == 0);
    CHECK(run_cli("verify " + data_path("kz2.struct") + " --suite identities") == 0);
    CHECK(run_cli("verify " + data_path("quaternion_smash.struct") + " --suite comodule-magma") == 0);
    CHECK(run_cli("verify " + data_path("quaternion_smash.struct") + " --suite anchor") == 0);
    CHECK(run_cli("verify " + data_path("quaternion_smash.struct") + " --suite module") == 0);
    CHECK(run_cli("fundamental " + data_path("kz2.struct")) == 0);
    CHECK(run_cli("fundamental " + data_path("octonion.struct")) == 0);
    CHECK(run_cli("fundamental " + data_path("octonion_opposite.struct")) == 0);
    CHECK(run_cli("equivalence " + data_path("kz2.struct")) == 0);
    CHECK(run_cli("equivalence " + data_path("weak_tensor.struct") + " --json") == 0);

    CHECK(run_cli("verify /nonexistent.struct") == 2);
    CHECK(run_cli("verify " + data_path("octonion.struct") + " --max-dim 4") == 2);
    CHECK(run_cli("") != 0); // usage error
}
