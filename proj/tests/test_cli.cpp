#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hermrep/json_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace hermrep;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// drives the installed binary; stderr is folded in when asked for
RunResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env = "") {
    const std::string cmd = (env.empty() ? "" : env + " ") + std::string(HERMREP_CLI_PATH) +
                            " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe)) r.out += buf;
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

Json json_of(const RunResult& r) { return Json::parse(r.out); }

std::string q(const std::string& s) { return "'" + s + "'"; }

} // namespace

TEST_CASE("classify spec handling") {
    // both-sides-infinite ladder at charge 2
    auto r = run_cli("classify --spec " +
                     q("{\"family\":\"I\",\"curvature\":\"domain\","
                       "\"Jplus\":{\"kind\":\"inf\"},\"Jminus\":{\"kind\":\"inf\"},"
                       "\"lambda_plus\":{\"entries\":{\"1\":\"1\"}},"
                       "\"lambda_minus\":{\"entries\":{\"1\":\"-1\"}},\"c\":\"2\"}"));
    CHECK(r.code == 0);
    Json v = json_of(r);
    CHECK(v["inducible"] == true);
    CHECK(v["reason_tag"] == "iinf_ladder");

    // same data one charge lower fails
    r = run_cli("classify --spec " +
                q("{\"family\":\"I\",\"curvature\":\"domain\","
                  "\"lambda_plus\":{\"entries\":{\"1\":\"1\"}},"
                  "\"lambda_minus\":{\"entries\":{\"1\":\"-1\"}},\"c\":1}"));
    CHECK(r.code == 0);
    CHECK(json_of(r)["inducible"] == false);

    // malformed JSON
    r = run_cli("classify --spec '{bad}'");
    CHECK(r.code == 2);
    CHECK(r.out.empty());

    // schema violations carry JSON pointers
    r = run_cli("classify --spec " +
                    q("{\"family\":\"I\",\"curvature\":\"domain\",\"lamda_plus\":{}}"),
                true);
    CHECK(r.code == 2);
    CHECK(r.out.find("/lamda_plus") != std::string::npos);
    r = run_cli("classify --spec " +
                    q("{\"family\":\"II\",\"curvature\":\"domain\",\"c\":\"1/2\"}"),
                true);
    CHECK(r.code == 2);
    CHECK(r.out.find("\"pointer\":\"/c\"") != std::string::npos);

    // table format is cosmetic but must render
    r = run_cli("classify --spec " + q("{\"family\":\"Flat\",\"curvature\":\"flat\",\"c\":0}") +
                " --format table");
    CHECK(r.code == 0);
    CHECK(r.out.find("inducible") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("classify reads spec files") {
    const std::string dir = HERMREP_SPECS_DIR;
    auto r = run_cli("classify --spec @" + dir + "/I_inf_c2.json");
    CHECK(r.code == 0);
    CHECK(json_of(r)["inducible"] == true);

    r = run_cli("classify --spec @" + dir + "/flat_cneg.json");
    CHECK(r.code == 0);
    CHECK(json_of(r)["inducible"] == false);

    r = run_cli("classify --spec @" + dir + "/ifin_22_scalar_half.json");
    CHECK(r.code == 0);
    Json v = json_of(r);
    CHECK(v["inducible"] == false);
    CHECK(v["reason_tag"] == "ifin_range");

    r = run_cli("classify --spec @" + dir + "/cdual_II_cneg.json");
    CHECK(r.code == 0);
    CHECK(json_of(r)["inducible"] == true);

    r = run_cli("classify --spec @" + dir + "/no_such_file.json");
    CHECK(r.code == 2);
}

TEST_CASE("verify-kernel reports and exit codes") {
    const std::string base = "verify-kernel --family I --p 2 --q 2 --samples 40 --seed 7";
    auto r = run_cli(base + " --charge 1/2");
    CHECK(r.code == 0);
    Json j = json_of(r);
    CHECK(j["verdict"] == "not_positive");
    CHECK(j["min_eigenvalue"].get<double>() < -1e-6);
    CHECK(j["charge"] == "1/2");

    r = run_cli(base + " --charge 1");
    CHECK(r.code == 0);
    CHECK(json_of(r)["verdict"] == "positive");

    // expectation flag drives the exit code
    r = run_cli(base + " --charge 1/2 --expect not_positive");
    CHECK(r.code == 0);
    r = run_cli(base + " --charge 1/2 --expect positive");
    CHECK(r.code == 1);

    r = run_cli("verify-kernel --family I --p 2 --q 2 --charge 1/2 --samples 0 --seed 7");
    CHECK(r.code == 2);
    r = run_cli("verify-kernel --family I --p 2 --q 2 --charge 1/2 --samples 40");
    CHECK(r.code == 2); // seed is mandatory

    r = run_cli("verify-kernel --family II --n 3 --charge 1 --samples 30 --seed 13");
    CHECK(r.code == 0);
    CHECK(json_of(r)["verdict"] == "positive");
}

TEST_CASE("enumerate matches the frozen grid") {
    auto r = run_cli("enumerate --spec " +
                     q("{\"family\":\"II\",\"curvature\":\"domain\","
                       "\"Jplus\":{\"kind\":\"inf\"}}") +
                     " --max-charge 2 --max-support 1 --max-entry 2");
    CHECK(r.code == 0);
    Json j = json_of(r);
    CHECK(j["count"] == 7);
    REQUIRE(j["reps"].size() == 7);
    CHECK(j["reps"][0]["c"] == "0");
    CHECK(j["reps"][3]["lambda_plus"]["entries"]["1"] == "1");
    CHECK(j["reps"][6]["lambda_plus"]["entries"]["1"] == "2");
    CHECK(j["reps"][6]["c"] == "2");
    for (const auto& row : j["reps"]) CHECK(row["verdict"]["inducible"] == true);
}

TEST_CASE("check suites") {
    auto r = run_cli("check --all --tol 1e-10 --seed 1");
    CHECK(r.code == 0);
    Json j = json_of(r);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() >= 15);

    r = run_cli("check --module jhtriple --type II --dim 4 --seed 5");
    CHECK(r.code == 0);
    CHECK(json_of(r)["all_pass"] == true);

    // deterministic module runs without a seed
    r = run_cli("check --module fock --dim 1 --degree 40");
    CHECK(r.code == 0);
    j = json_of(r);
    bool saw_weyl = false;
    for (const auto& row : j["checks"])
        if (row["name"] == "weyl relation") {
            saw_weyl = true;
            CHECK(row["residual"].get<double>() <= 1e-6);
        }
    CHECK(saw_weyl);

    // stochastic module without a seed is an input error
    r = run_cli("check --module liealg");
    CHECK(r.code == 2);
    r = run_cli("check --module liealg --seed 2 --all");
    CHECK(r.code == 2);
    r = run_cli("check --tol 1e-10 --seed 1");
    CHECK(r.code == 2);
}

TEST_CASE("crossval agreement tables") {
    auto r = run_cli("crossval --p 2 --q 2 --grid 0,1/2,1,3/2,2 --samples 40 --seed 7");
    CHECK(r.code == 0);
    Json j = json_of(r);
    CHECK(j["all_agree"] == true);
    REQUIRE(j["rows"].size() == 5);
    const bool expected[] = {true, false, true, true, true};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(j["rows"][i]["inducible"] == expected[i]);
        CHECK(j["rows"][i]["kernel_positive"] == expected[i]);
        CHECK(j["rows"][i]["agree"] == true);
    }
    CHECK(j["rows"][1]["min_eigenvalue"].get<double>() < -1e-6);

    r = run_cli("crossval --p 1 --q 1 --grid 0,1/2,1,2 --samples 40 --seed 7");
    CHECK(r.code == 0);
    CHECK(json_of(r)["all_agree"] == true);

    r = run_cli("crossval --flat --grid -1,0,1 --samples 20 --seed 3");
    CHECK(r.code == 0);
    j = json_of(r);
    CHECK(j["all_agree"] == true);
    CHECK(j["rows"][0]["inducible"] == false);
    CHECK(j["rows"][0]["kernel_positive"] == false);
    CHECK(j["rows"][1]["kernel_positive"] == true);
    CHECK(j["rows"][2]["kernel_positive"] == true);

    r = run_cli("crossval --p 2 --q 2 --grid 1 --samples 40");
    CHECK(r.code == 2); // seed is mandatory
}

TEST_CASE("byte-identical output for identical input and seed") {
    const std::string cmd = "crossval --p 1 --q 1 --grid 0,1,2 --samples 30 --seed 11";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    const std::string vk = "verify-kernel --family I --p 1 --q 1 --charge 2 --samples 25 "
                           "--seed 4";
    a = run_cli(vk);
    b = run_cli(vk);
    CHECK(a.out == b.out);
}

TEST_CASE("fock subcommand and output redirection") {
    auto r = run_cli("fock --dim 1 --degree 10");
    CHECK(r.code == 0);
    Json j = json_of(r);
    CHECK(j["dimension"] == 11);
    CHECK(j["vacuum_cyclic"] == true);
    CHECK(j["ccr_mixed"].get<double>() <= 1e-12);

    const std::string path = "/tmp/hermrep_cli_fock_out.json";
    std::remove(path.c_str());
    r = run_cli("fock --dim 2 --degree 4 --output " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    Json file_doc = Json::parse(in);
    CHECK(file_doc["dimension"] == 15);
    std::remove(path.c_str());

    // env cap on threads must not change results
    r = run_cli("fock --dim 1 --degree 10");
    auto capped = run_cli("fock --dim 1 --degree 10", false, "HERMREP_THREADS=1");
    CHECK(capped.code == 0);
    CHECK(capped.out == r.out);
}
