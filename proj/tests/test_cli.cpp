/*
   Copyright 2026 the qsc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// stdout only; stderr is dropped so diagnostics stay out of the goldens
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QSC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) { result.out.append(buf, got); }
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli: qr reports the hand-checked length-31 generators") {
    const CliResult r = run_cli("qr --p 31 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("p") == 31);
    CHECK(j.at("field").at("modulus").at("hex") == "0x25");
    CHECK(j.at("codes").at("nonresidue").at("generator").at("text") ==
          "x^15+x^12+x^7+x^6+x^2+x+1");
    CHECK(j.at("codes").at("residue").at("generator").at("hex") == "0xe309");
    CHECK(j.at("codes").at("residue").at("k") == 16);
    CHECK(j.at("codes").at("residue_bar").at("k") == 15);
    CHECK(contains(r.out, "x^15+x^12+x^7+x^6+x^2+x+1"));
}

TEST_CASE("cli: lemma2 verification is only defined for p = 8m - 1") {
    CHECK(run_cli("qr --p 17").exit_code == 0);
    CHECK(run_cli("qr --p 17 --verify-lemma2").exit_code == 2);

    const CliResult r = run_cli("qr --p 23 --verify-lemma2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "all_hold=true"));
}

TEST_CASE("cli: qr rejects unusable lengths") {
    CHECK(run_cli("qr --p 12").exit_code == 2);
    CHECK(run_cli("qr --p 13").exit_code == 2);
    CHECK(run_cli("qr").exit_code == 2);
}

TEST_CASE("cli: qr --min-distance pins the Golay distance") {
    const CliResult r = run_cli("qr --p 23 --min-distance");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "residue: [23,12]"));
    CHECK(contains(r.out, "d=7 (exact)"));
}

TEST_CASE("cli: chain lists factors, codes and the parameter table") {
    const CliResult r = run_cli("chain --l 5 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("p") == 31);
    REQUIRE(j.at("factors").size() == 3);
    CHECK(j.at("factors").at(0).at("factor").at("hex") == "0x25");
    REQUIRE(j.at("codes").size() == 3);
    CHECK(j.at("codes").at(0).at("k") == 16);
    CHECK(j.at("codes").at(1).at("k") == 21);
    CHECK(j.at("codes").at(2).at("k") == 26);
    REQUIRE(j.at("table").size() == 3);
    CHECK(j.at("table").at(2).at("dim_q") == 21);

    const CliResult truncated = run_cli("chain --l 5 --z-max 0 --format json");
    CHECK(nlohmann::json::parse(truncated.out).at("table").size() == 1);
}

TEST_CASE("cli: chain CSV has one row per factor") {
    const CliResult r = run_cli("chain --l 7 --format csv");
    REQUIRE(r.exit_code == 0);
    std::size_t lines = 0;
    for (const char c : r.out) { lines += c == '\n' ? 1 : 0; }
    CHECK(lines == 10); // header + nine factors
    CHECK(contains(r.out, "rep,degree,factor,factor_hex"));
}

TEST_CASE("cli: chain rejects non-Mersenne exponents") {
    CHECK(run_cli("chain --l 4").exit_code == 2);
    CHECK(run_cli("chain --l 2").exit_code == 2);
}

TEST_CASE("cli: params prints the designed pair") {
    const CliResult r = run_cli("params --p 31 --z 0 --y 1 --cl 2 --cr 2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("k1") == 21);
    CHECK(j.at("k2") == 16);
    CHECK(j.at("dim_q") == 1);
    CHECK(j.at("ord_f") == 31);
    CHECK(j.at("d1") == 5);
    CHECK(j.at("d2") == 7);
    CHECK(j.at("t_bit") == 2);
    CHECK(j.at("t_phase") == 3);
}

TEST_CASE("cli: simulate succeeds on every trial within the design weight") {
    const CliResult r = run_cli(
        "simulate --p 31 --z 0 --y 1 --cl 15 --cr 15 --trials 10000 --max-errors 2 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "trials=10000"));
    CHECK(contains(r.out, "successes=10000"));
}

TEST_CASE("cli: simulate rejects margins reaching the quotient order") {
    const CliResult r = run_cli(
        "simulate --p 31 --z 0 --y 1 --cl 16 --cr 15 --trials 10 --max-errors 0 --seed 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: zero trials is a valid empty run") {
    const CliResult r = run_cli(
        "simulate --p 31 --z 0 --y 1 --cl 15 --cr 15 --trials 0 --max-errors 2 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "trials=0 successes=0"));
}

TEST_CASE("cli: repeated seeded runs are byte-identical") {
    const std::string args =
        "simulate --p 31 --z 0 --y 1 --cl 15 --cr 15 --trials 500 --max-errors 3 --seed 7 "
        "--format json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("cli: mindist covers both the residue code and chain codes") {
    const CliResult golay = run_cli("mindist --p 23");
    CHECK(golay.exit_code == 0);
    CHECK(contains(golay.out, "n=23 k=12 d=7 exact=true"));

    const CliResult wide = run_cli("mindist --p 31 --z 2");
    CHECK(wide.exit_code == 0);
    CHECK(contains(wide.out, "d=unknown"));
    const CliResult wide_capped = run_cli("mindist --p 31 --z 2 --cap 26");
    CHECK(wide_capped.exit_code == 0);
    CHECK(contains(wide_capped.out, "n=31 k=26 d=3 exact=true"));

    CHECK(run_cli("mindist --p 31 --z 3").exit_code == 2);
}

TEST_CASE("cli: --output writes exactly what stdout would carry") {
    const std::string path = "qsc_cli_test_output.json";
    const CliResult direct = run_cli("qr --p 7 --format json");
    const CliResult filed = run_cli("qr --p 7 --format json --output " + path);
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("cli: a subcommand is required and unknown ones are rejected") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
