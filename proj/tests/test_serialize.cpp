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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsc/chain.hpp"
#include "qsc/cyclic.hpp"
#include "qsc/poly.hpp"
#include "qsc/serialize.hpp"
#include "qsc/syncsim.hpp"

using qsc::CodeRecord;
using qsc::CyclicCode;
using qsc::Json;
using qsc::MinDistanceRecord;
using qsc::Poly;

TEST_CASE("polynomials serialize to matched text and hex forms") {
    const Json j = qsc::poly_json(Poly::parse_hex("0x90c7"));
    CHECK(j.at("text") == "x^15+x^12+x^7+x^6+x^2+x+1");
    CHECK(j.at("hex") == "0x90c7");
    CHECK(qsc::poly_json(Poly::zero()).at("hex") == "0x0");
}

TEST_CASE("code records survive a JSON round trip") {
    const CyclicCode code(31, Poly::parse_hex("0xe309"));
    const CodeRecord record =
        qsc::make_code_record(code, MinDistanceRecord{.value = 7, .exact = true});
    const Json j = qsc::to_json(record);
    CHECK(j.at("n") == 31);
    CHECK(j.at("k") == 16);
    CHECK(j.at("dual_containing") == true);
    CHECK(j.at("min_distance").at("value") == 7);
    CHECK(j.at("min_distance").at("exact") == true);

    const CodeRecord back = qsc::code_record_from_json(j);
    CHECK(back.n == record.n);
    CHECK(back.k == record.k);
    CHECK(back.generator == record.generator);
    CHECK(back.dual_generator == record.dual_generator);
    CHECK(back.dual_containing == record.dual_containing);
    REQUIRE(back.min_distance.has_value());
    CHECK(back.min_distance->value == 7);
    CHECK(back.min_distance->exact);

    // a missing distance is an explicit null, and comes back disengaged
    const Json no_dist = qsc::to_json(qsc::make_code_record(code, std::nullopt));
    CHECK(no_dist.at("min_distance").is_null());
    CHECK(!qsc::code_record_from_json(no_dist).min_distance.has_value());
}

TEST_CASE("disagreeing polynomial forms are rejected on input") {
    const CyclicCode code(7, Poly::parse_hex("0xb"));
    Json j = qsc::to_json(qsc::make_code_record(code, std::nullopt));
    j["generator"]["hex"] = "0xd";
    CHECK_THROWS_WITH_AS((void)qsc::code_record_from_json(j),
                         "polynomial text and hex forms disagree", std::invalid_argument);
}

TEST_CASE("synchronizable parameters serialize with nulls for unknowns") {
    const qsc::FactorChain chain = qsc::mersenne_chain(5);
    const auto params = qsc::qsync_params(qsc::chain_code(chain, 1), chain.codes[0], 2, 2);
    const Json j = qsc::to_json(params);
    CHECK(j.at("n") == 31);
    CHECK(j.at("c_l") == 2);
    CHECK(j.at("c_r") == 2);
    CHECK(j.at("length") == 35);
    CHECK(j.at("k1") == 21);
    CHECK(j.at("k2") == 16);
    CHECK(j.at("dim_q") == 1);
    CHECK(j.at("f").at("hex") == "0x2f");
    CHECK(j.at("ord_f") == 31);
    CHECK(j.at("d1") == 5);
    CHECK(j.at("d2") == 7);
    CHECK(j.at("t_bit") == 2);
    CHECK(j.at("t_phase") == 3);

    // a full-space outer code has no distance to report, and the inner
    // dimension 26 sits above the default enumeration cap
    const auto full = qsc::qsync_params(qsc::chain_code(chain, 3), chain.codes[2], 2, 2);
    const Json jf = qsc::to_json(full);
    CHECK(jf.at("d1").is_null());
    CHECK(jf.at("t_bit").is_null());
    CHECK(jf.at("d2").is_null());
    CHECK(jf.at("t_phase").is_null());
    CHECK(jf.at("dim_q") == 21);
}

TEST_CASE("trial summaries carry their parameters and every failure") {
    const qsc::FactorChain chain = qsc::mersenne_chain(5);
    const auto params = qsc::qsync_params(qsc::chain_code(chain, 1), chain.codes[0], 15, 15);
    const auto summary = qsc::run_trials(params, 150, 3, 2026);
    const Json j = qsc::to_json(summary, params);
    CHECK(j.at("params").at("k1") == 21);
    CHECK(j.at("trials") == 150);
    CHECK(j.at("successes") == summary.successes);
    CHECK(j.at("max_errors") == 3);
    CHECK(j.at("seed") == 2026);
    REQUIRE(j.at("failures").size() == summary.failures.size());
    for (std::size_t i = 0; i < summary.failures.size(); ++i) {
        const Json& f = j.at("failures").at(i);
        CHECK(f.at("trial_index") == summary.failures[i].trial_index);
        CHECK(f.at("theta") == summary.failures[i].theta);
        CHECK(f.at("error_positions").size() == summary.failures[i].error_positions.size());
        CHECK(f.at("reason") == summary.failures[i].reason);
    }

    // identical inputs must serialize byte-for-byte identically
    const auto again = qsc::run_trials(params, 150, 3, 2026);
    CHECK(qsc::to_json(again, params).dump(2) == j.dump(2));
}

TEST_CASE("parameter-table rows serialize flat") {
    const auto rows = qsc::theorem2_table(5);
    const Json j = qsc::to_json(rows[1]);
    CHECK(j.at("z") == 1);
    CHECK(j.at("k2") == 21);
    CHECK(j.at("dim_q") == 11);
    CHECK(j.at("max_shift") == 30);
}

TEST_CASE("code-record CSV is stable, one line per record") {
    const CyclicCode code(7, Poly::parse_hex("0xb"));
    const std::vector<std::pair<std::string, CodeRecord>> records = {
        {"residue", qsc::make_code_record(code, MinDistanceRecord{.value = 3, .exact = true})},
        {"plain", qsc::make_code_record(code, std::nullopt)},
    };
    const std::string expect =
        "name,n,k,generator,generator_hex,dual_generator,dual_generator_hex,"
        "dual_containing,min_distance,min_distance_exact\n"
        "residue,7,4,x^3+x+1,0xb,x^4+x^3+x^2+1,0x1d,true,3,true\n"
        "plain,7,4,x^3+x+1,0xb,x^4+x^3+x^2+1,0x1d,true,,\n";
    CHECK(qsc::code_records_csv(records) == expect);
}

TEST_CASE("factor-chain CSV lists one factor per line") {
    const std::string csv = qsc::chain_factors_csv(qsc::mersenne_chain(5));
    const std::string expect = "rep,degree,factor,factor_hex\n"
                               "1,5,x^5+x^2+1,0x25\n"
                               "5,5,x^5+x^4+x^2+x+1,0x37\n"
                               "7,5,x^5+x^3+x^2+x+1,0x2f\n";
    CHECK(csv == expect);

    // nine degree-7 factors at length 127: header plus nine rows
    const std::string big = qsc::chain_factors_csv(qsc::mersenne_chain(7));
    std::size_t lines = 0;
    for (const char c : big) { lines += c == '\n' ? 1 : 0; }
    CHECK(lines == 10);
}

TEST_CASE("failure CSV spells window positions space-separated") {
    qsc::TrialSummary summary;
    summary.trials = 2;
    summary.successes = 1;
    summary.failures.push_back(qsc::TrialFailure{.trial_index = 1,
                                                 .theta = -4,
                                                 .error_positions = {3, 17, 30},
                                                 .reason = "uncorrectable bit errors"});
    const std::string expect = "trial_index,theta,error_positions,reason\n"
                               "1,-4,3 17 30,uncorrectable bit errors\n";
    CHECK(qsc::trial_failures_csv(summary) == expect);
}
