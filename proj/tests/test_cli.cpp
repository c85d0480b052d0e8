#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CVPK_CLI_PATH
#error "CVPK_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/cvpk_cli_test_out.txt";
    const std::string cmd =
        std::string(CVPK_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("profile of Q(4)") {
    const CliResult r = run_cli("profile --family cvpk --size 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "d = 1 2 2 4; E = 0.50000\n");
}

TEST_CASE("kernel print in text form") {
    const CliResult r = run_cli("kernel print --family cvpk --size 4 --format txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1000\n1010\n0110\n1111\n");
}

TEST_CASE("kernel print as json carries rows and a manifest") {
    const CliResult r = run_cli("kernel print --family arikan --size 4 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 4);
    CHECK(doc["family"] == "arikan-power");
    CHECK(doc["rows"] == nlohmann::json({"1000", "1100", "1010", "1111"}));
    CHECK(doc["manifest"]["command"] == "kernel print");
    CHECK(doc["manifest"].contains("digest"));
}

TEST_CASE("mu of Q(8) lands on the reported value") {
    const CliResult r = run_cli("mu --family cvpk --size 8");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 8);
    CHECK(doc["converged"] == true);
    CHECK(std::abs(doc["mu"].get<double>() - 3.577) < 0.015);
    CHECK(doc["grid"] == 4096);
}

TEST_CASE("gpb verify-oracle exits clean on agreement") {
    const CliResult r = run_cli("gpb --size 8 --verify-oracle");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 8);
    CHECK(doc["phases"].size() == 6);
}

TEST_CASE("pb csv starts with the header row after the manifest comment") {
    const CliResult r = run_cli("pb --family cvpk --size 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("# manifest ", 0) == 0);
    CHECK(r.out.find("phase,weight,count\n") != std::string::npos);
    CHECK(r.out.find("0,1,4\n") != std::string::npos);  // A_1 = 4 at phase 0
    CHECK(r.out.find("3,4,1\n") != std::string::npos);  // P(3) = x^4
}

TEST_CASE("repeated invocations are byte-identical") {
    const CliResult a = run_cli("pb --family cvpk-swapped --size 16");
    const CliResult b = run_cli("pb --family cvpk-swapped --size 16");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const CliResult c = run_cli("mu --family cvpk --size 4 --threads 1");
    const CliResult d = run_cli("mu --family cvpk --size 4 --threads 3");
    CHECK(c.out == d.out);
}

TEST_CASE("bad arguments exit with code 2") {
    CHECK(run_cli("pb --family nosuch --size 4").exit_code == 2);
    CHECK(run_cli("pb --family cvpk --size 5").exit_code == 2);
    CHECK(run_cli("pb").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("mu --family cvpk --size 8 --interp quartic").exit_code == 2);
}

TEST_CASE("guard violations exit with code 3") {
    CHECK(run_cli("oracle pb --size 32").exit_code == 3);
    CHECK(run_cli("oracle gpb --size 32").exit_code == 3);
    CHECK(run_cli("gpb --size 32 --verify-oracle").exit_code == 3);
    CHECK(run_cli("pb --family cvpk-sorted --size 32").exit_code == 3);
}

TEST_CASE("oracle pb subcommand with explicit family") {
    const CliResult r = run_cli("oracle pb --family arikan --size 4");
    CHECK(r.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["source"] == "oracle");
    CHECK(doc["family"] == "arikan-power");
    CHECK(doc["phases"].size() == 4);
}

TEST_CASE("report table3 lists one row per size") {
    const CliResult r = run_cli("report table3 --max-size 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.50000") != std::string::npos);
    CHECK(r.out.find("3.62") != std::string::npos);
    CHECK(r.out.find("3.57") != std::string::npos);
}

}  // TEST_SUITE
