#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "harborth/cli.hpp"

using namespace harborth;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/harborth_test_") + name;
}

}  // namespace

TEST_CASE("exact command reproduces g^4(C_2^4) = 7") {
    const CliRun r = run({"exact", "--group", "2,2,2,2", "--k", "4", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("harborth: 7") != std::string::npos);
    CHECK(r.out.find("exhausted: true") != std::string::npos);
    CHECK(r.out.find("timestamp") == std::string::npos);
}

TEST_CASE("exact JSON carries the documented fields") {
    const CliRun r = run(
        {"exact", "--group", "18", "--k", "3", "--format", "json", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == "18");
    CHECK(j["k"] == 3);
    CHECK(j["harborth"] == 10);
    CHECK(j["max_free_size"] == 9);
    CHECK(j["exhausted"] == true);
    CHECK(j.contains("nodes_explored"));
}

TEST_CASE("group literals echo in canonical invariant-factor form") {
    const CliRun r = run(
        {"exact", "--group", "6,4", "--k", "2", "--format", "json", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == "2,12");
}

TEST_CASE("repeat runs are byte identical with the timestamp suppressed") {
    const std::vector<std::string> args = {"exact",    "--group",       "2,2,2,2,2", "--k", "4",
                                           "--format", "json",          "--workers", "1",
                                           "--no-timestamp"};
    const CliRun a = run(args);
    auto args2 = args;
    args2[8] = "3";  // different worker count
    const CliRun b = run(args2);
    CHECK(a.exit_code == kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("verify accepts the hardcoded 3-free fixture") {
    const std::string path = temp_path("fixture_c12_k3.txt");
    {
        std::ofstream f(path);
        f << "group: 12\n1\n2\n5\n7\n10\n11\n";
    }
    const CliRun good = run({"verify", "--set", path, "--k", "3"});
    CHECK(good.exit_code == kExitOk);
    CHECK(good.out == "k-zero-sum-free: true\n");

    const CliRun bad = run({"verify", "--set", path, "--k", "4"});  // 1+2+10+11 = 0 mod 12
    CHECK(bad.exit_code == kExitVerification);
    CHECK(bad.out == "k-zero-sum-free: false\n");
    std::remove(path.c_str());
}

TEST_CASE("bounds JSON for C_9, k=4 shows the interval") {
    const CliRun r = run(
        {"bounds", "--group", "9", "--k", "4", "--format", "json", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["lower"] == 6);
    CHECK(j["upper"] == 7);
    CHECK(j["exact"].is_null());
}

TEST_CASE("construct emits the set and the JSON report") {
    const std::string path = temp_path("c3_interval_n7.txt");
    const CliRun r = run({"construct", "--name", "c3_interval", "-n", "7", "--format", "json",
                          "--no-timestamp", "--set-out", path});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["name"] == "c3_interval");
    CHECK(j["claimed_size"] == 3);
    CHECK(j["implied_lower_bound"] == 4);
    CHECK(j["verified"] == true);
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == "group: 7\n1\n2\n3\n");
    std::remove(path.c_str());
}

TEST_CASE("construct fixtures lists every hardcoded set") {
    const CliRun r = run({"construct", "--name", "fixtures", "--format", "json",
                          "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["fixtures"].size() == 9);
}

TEST_CASE("sumset command with dsh check") {
    const std::string path = temp_path("sumset_in.txt");
    {
        std::ofstream f(path);
        f << "group: 7\n1\n2\n3\n";
    }
    const CliRun r = run({"sumset", "--set", path, "--k", "2", "--dsh", "--format", "json",
                          "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["size"] == 3);
    CHECK(j["dsh"]["bound"] == 3);
    CHECK(j["dsh"]["holds"] == true);

    const CliRun upto = run({"sumset", "--set", path, "--k", "2", "--upto", "--format", "json",
                             "--no-timestamp"});
    CHECK(nlohmann::json::parse(upto.out)["size"] == 5);
    std::remove(path.c_str());
}

TEST_CASE("table remark313 reproduces the three special values") {
    const CliRun r = run({"table", "remark313", "--format", "csv", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "group,k,paper,registry_lower,registry_upper,solver,match");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "\"7\",6,7,7,7,7,true");
    CHECK(rows[1] == "\"11\",8,10,10,10,10,true");
    CHECK(rows[2] == "\"13\",8,10,10,10,10,true");
}

TEST_CASE("table prop315 matches the known row of values") {
    const CliRun r = run({"table", "prop315", "--format", "json", "--no-timestamp"});
    CHECK(r.exit_code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    const std::vector<std::int64_t> expected = {4, 5, 5, 5, 6, 7, 7, 7, 7};
    REQUIRE(j["rows"].size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(j["rows"][i]["paper"] == expected[i]);
        CHECK(j["rows"][i]["solver"] == expected[i]);
        CHECK(j["rows"][i]["match"] == true);
    }
}

TEST_CASE("exact decision form through the CLI") {
    const CliRun yes = run({"exact", "--group", "8", "--k", "3", "--exists-size", "5",
                            "--format", "json", "--no-timestamp"});
    CHECK(yes.exit_code == kExitOk);
    CHECK(nlohmann::json::parse(yes.out)["status"] == "found");

    const CliRun no = run({"exact", "--group", "8", "--k", "3", "--exists-size", "6",
                           "--format", "json", "--no-timestamp"});
    CHECK(no.exit_code == kExitOk);
    CHECK(nlohmann::json::parse(no.out)["status"] == "ruled_out");
}

TEST_CASE("witness file round-trips through verify") {
    const std::string path = temp_path("witness.txt");
    const CliRun solve = run({"exact", "--group", "8", "--k", "3", "--witness-out", path,
                              "--no-timestamp"});
    CHECK(solve.exit_code == kExitOk);
    const CliRun check = run({"verify", "--set", path, "--k", "3"});
    CHECK(check.exit_code == kExitOk);
    std::remove(path.c_str());
}

TEST_CASE("usage errors name the offending input") {
    const CliRun bad_group = run({"exact", "--group", "banana", "--k", "3"});
    CHECK(bad_group.exit_code == kExitUsage);
    CHECK(bad_group.err.find("banana") != std::string::npos);

    const CliRun bad_k = run({"exact", "--group", "9", "--k", "99"});
    CHECK(bad_k.exit_code == kExitUsage);

    const CliRun no_file = run({"verify", "--set", "/nonexistent/file.txt", "--k", "3"});
    CHECK(no_file.exit_code == kExitUsage);
    CHECK(no_file.err.find("--set") != std::string::npos);

    const CliRun bad_flag = run({"exact", "--group", "9"});
    CHECK(bad_flag.exit_code == kExitUsage);

    const CliRun no_cmd = run({});
    CHECK(no_cmd.exit_code == kExitUsage);
}

TEST_CASE("budget exhaustion exits with its own code") {
    const CliRun r = run({"exact", "--group", "2,12", "--k", "3", "--budget-nodes", "2",
                          "--symmetry", "none", "--no-timestamp"});
    CHECK(r.exit_code == kExitBudget);
    CHECK(r.out.find("exhausted: false") != std::string::npos);
}

TEST_CASE("oracle command agrees with exact") {
    const CliRun a = run({"oracle", "--group", "7", "--k", "6", "--format", "csv"});
    const CliRun b = run({"exact", "--group", "7", "--k", "6", "--format", "csv"});
    CHECK(a.exit_code == kExitOk);
    // same header and same harborth column
    CHECK(a.out.substr(0, a.out.find('\n')) == b.out.substr(0, b.out.find('\n')));
    CHECK(a.out.find(",6,6,7,true,") != std::string::npos);
}

TEST_CASE("--output writes the report to a file") {
    const std::string path = temp_path("report.json");
    const CliRun r = run({"bounds", "--group", "13", "--k", "4", "--format", "json",
                          "--no-timestamp", "--output", path});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    const auto j = nlohmann::json::parse(f);
    CHECK(j["exact"] == 7);
    std::remove(path.c_str());
}
