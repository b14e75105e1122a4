#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "sosclique/certificate.hpp"
#include "sosclique/constructions.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SOSCLIQUE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("sosclique_test_" + name);
}

}  // namespace

TEST_CASE("construct plane then verify round trip") {
    fs::path cert = temp_file("fano.cert.json");
    auto built = run_cli("construct plane --q 2 --out " + cert.string());
    CHECK(built.exit_code == 0);

    auto verified = run_cli("verify " + cert.string());
    CHECK(verified.exit_code == 0);
    CHECK(verified.output.find("VALID SOS-clique, size 6, k=2, ell=6, sunflower=false") !=
          std::string::npos);
    fs::remove(cert);
}

TEST_CASE("search mu prints the exact value and a verifiable witness") {
    fs::path cert = temp_file("mu26.cert.json");
    auto res = run_cli("search mu --k 2 --ell 6 --out " + cert.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("mu = 6 (exact)") != std::string::npos);

    auto verified = run_cli("verify " + cert.string());
    CHECK(verified.exit_code == 0);
    fs::remove(cert);
}

TEST_CASE("every construct subcommand produces a certificate that verifies") {
    for (std::string spec : {std::string("sunflower --k 2 --ell 13"), std::string("plane --q 3"),
                             std::string("fano"), std::string("eightcol")}) {
        fs::path cert = temp_file("construct.cert.json");
        auto built = run_cli("construct " + spec + " --out " + cert.string());
        INFO(spec << ": " << built.output);
        CHECK(built.exit_code == 0);
        auto verified = run_cli("verify " + cert.string());
        CHECK(verified.exit_code == 0);
        fs::remove(cert);
    }
}

TEST_CASE("bounds output") {
    auto res = run_cli("bounds --k 2 --ell 13");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("sunflower_value              6") != std::string::npos);
    CHECK(res.output.find("general_upper                14") != std::string::npos);
    CHECK(res.output.find("regime_threshold             32") != std::string::npos);
}

TEST_CASE("maxsos output") {
    auto res = run_cli("maxsos --family A --rank 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("max_sos_size(A3) = 2") != std::string::npos);
}

TEST_CASE("table smalla") {
    auto res = run_cli("table smalla --max-ell 6");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("all rows match") != std::string::npos);
}

TEST_CASE("exit code matrix") {
    using namespace sosclique;

    // verification failure: a pair that is not an edge
    fs::path bad = temp_file("bad.cert.json");
    {
        CliqueFamily f = CliqueFamily::make(
            2, 5,
            {Signature::make(std::vector<int>{1, 1, -1, -1, 0, 0}, 2),
             Signature::make(std::vector<int>{1, -1, 1, 0, -1, 0}, 2)});
        std::ofstream out(bad);
        out << write_certificate(f, "handmade", false);
    }
    CHECK(run_cli("verify " + bad.string()).exit_code == 1);

    // strict membership downgrades the fano family
    fs::path fano = temp_file("fano2.cert.json");
    run_cli("construct fano --out " + fano.string());
    CHECK(run_cli("verify " + fano.string()).exit_code == 0);
    CHECK(run_cli("verify " + fano.string() + " --strict-membership").exit_code == 1);

    // invalid certificate contents: an out-of-range entry
    fs::path invalid = temp_file("invalid.cert.json");
    {
        std::ofstream out(invalid);
        out << "{\n  \"schema_version\": \"1\",\n  \"family_type\": \"A\",\n  \"ell\": 3,\n"
               "  \"k\": 1,\n  \"signatures\": [\n    [2, -1, 0, 0]\n  ],\n"
               "  \"provenance\": \"broken\",\n  \"exact\": true\n}\n";
    }
    CHECK(run_cli("verify " + invalid.string()).exit_code == 1);

    // malformed JSON is a usage problem
    fs::path garbled = temp_file("garbled.cert.json");
    {
        std::ofstream out(garbled);
        out << "{ not json";
    }
    CHECK(run_cli("verify " + garbled.string()).exit_code == 2);

    // usage errors
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("search mu --k 2").exit_code == 2);        // missing --ell
    CHECK(run_cli("bounds --k 2 --ell 13 --s 5").exit_code == 2);
    CHECK(run_cli("maxsos --family Z --rank 1").exit_code == 2);
    CHECK(run_cli("construct plane --q 6").exit_code == 2);
    CHECK(run_cli("verify /nonexistent/file.json").exit_code == 2);

    // success paths exit zero
    CHECK(run_cli("bounds --k 1 --ell 1").exit_code == 0);
    CHECK(run_cli("search mu --k 2 --ell 4").exit_code == 0);

    for (auto p : {bad, fano, invalid, garbled}) fs::remove(p);
}
