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

#include "qsc/serialize.hpp"

#include <stdexcept>

namespace qsc {

CodeRecord make_code_record(const CyclicCode& code,
                            std::optional<MinDistanceRecord> min_distance) {
    return CodeRecord{.n = code.length(),
                      .k = code.dim(),
                      .generator = code.generator(),
                      .dual_generator = dual(code).generator(),
                      .dual_containing = is_dual_containing(code),
                      .min_distance = min_distance};
}

Json poly_json(const Poly& p) {
    Json j;
    j["text"] = p.to_text();
    j["hex"] = p.to_hex();
    return j;
}

Json to_json(const CodeRecord& record) {
    Json j;
    j["n"] = record.n;
    j["k"] = record.k;
    j["generator"] = poly_json(record.generator);
    j["dual_generator"] = poly_json(record.dual_generator);
    j["dual_containing"] = record.dual_containing;
    if (record.min_distance) {
        j["min_distance"] = Json{{"value", record.min_distance->value},
                                 {"exact", record.min_distance->exact}};
    } else {
        j["min_distance"] = nullptr;
    }
    return j;
}

namespace {

    Poly poly_from_json(const Json& j) {
        const Poly from_text = Poly::parse_text(j.at("text").get<std::string>());
        const Poly from_hex = Poly::parse_hex(j.at("hex").get<std::string>());
        if (from_text != from_hex) {
            throw std::invalid_argument("polynomial text and hex forms disagree");
        }
        return from_text;
    }

} // namespace

CodeRecord code_record_from_json(const Json& j) {
    CodeRecord record{.n = j.at("n").get<std::uint64_t>(),
                      .k = j.at("k").get<std::uint64_t>(),
                      .generator = poly_from_json(j.at("generator")),
                      .dual_generator = poly_from_json(j.at("dual_generator")),
                      .dual_containing = j.at("dual_containing").get<bool>(),
                      .min_distance = std::nullopt};
    if (j.contains("min_distance") && !j.at("min_distance").is_null()) {
        record.min_distance =
            MinDistanceRecord{.value = j.at("min_distance").at("value").get<std::uint64_t>(),
                              .exact = j.at("min_distance").at("exact").get<bool>()};
    }
    return record;
}

Json to_json(const QsyncParams& params) {
    Json j;
    j["n"] = params.n;
    j["c_l"] = params.c_l;
    j["c_r"] = params.c_r;
    j["length"] = params.n + params.c_l + params.c_r;
    j["k1"] = params.k1;
    j["k2"] = params.k2;
    j["dim_q"] = params.dim_q;
    j["f"] = poly_json(params.f);
    j["ord_f"] = params.ord_f;
    j["d1"] = params.d1 ? Json(*params.d1) : Json(nullptr);
    j["d2"] = params.d2 ? Json(*params.d2) : Json(nullptr);
    j["t_bit"] = params.t_bit ? Json(*params.t_bit) : Json(nullptr);
    j["t_phase"] = params.t_phase ? Json(*params.t_phase) : Json(nullptr);
    return j;
}

Json to_json(const TrialSummary& summary, const QsyncParams& params) {
    Json j;
    j["params"] = to_json(params);
    j["trials"] = summary.trials;
    j["successes"] = summary.successes;
    j["max_errors"] = summary.max_errors;
    j["seed"] = summary.seed;
    Json failures = Json::array();
    for (const auto& failure : summary.failures) {
        Json f;
        f["trial_index"] = failure.trial_index;
        f["theta"] = failure.theta;
        f["error_positions"] = failure.error_positions;
        f["reason"] = failure.reason;
        failures.push_back(std::move(f));
    }
    j["failures"] = std::move(failures);
    return j;
}

Json to_json(const Theorem2Row& row) {
    Json j;
    j["z"] = row.z;
    j["k2"] = row.k2;
    j["dim_q"] = row.dim_q;
    j["max_shift"] = row.max_shift;
    return j;
}

std::string code_records_csv(std::span<const std::pair<std::string, CodeRecord>> records) {
    std::string out = "name,n,k,generator,generator_hex,dual_generator,dual_generator_hex,"
                      "dual_containing,min_distance,min_distance_exact\n";
    for (const auto& [name, record] : records) {
        out += name;
        out += ',' + std::to_string(record.n);
        out += ',' + std::to_string(record.k);
        out += ',' + record.generator.to_text();
        out += ',' + record.generator.to_hex();
        out += ',' + record.dual_generator.to_text();
        out += ',' + record.dual_generator.to_hex();
        out += record.dual_containing ? ",true" : ",false";
        if (record.min_distance) {
            out += ',' + std::to_string(record.min_distance->value);
            out += record.min_distance->exact ? ",true" : ",false";
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

std::string chain_factors_csv(const FactorChain& chain) {
    std::string out = "rep,degree,factor,factor_hex\n";
    for (std::size_t i = 0; i < chain.factors.size(); ++i) {
        out += std::to_string(chain.reps[i]);
        out += ',' + std::to_string(chain.factors[i].degree().value_or(0));
        out += ',' + chain.factors[i].to_text();
        out += ',' + chain.factors[i].to_hex();
        out += '\n';
    }
    return out;
}

std::string trial_failures_csv(const TrialSummary& summary) {
    std::string out = "trial_index,theta,error_positions,reason\n";
    for (const auto& failure : summary.failures) {
        out += std::to_string(failure.trial_index);
        out += ',' + std::to_string(failure.theta);
        out += ',';
        for (std::size_t i = 0; i < failure.error_positions.size(); ++i) {
            if (i > 0) { out += ' '; }
            out += std::to_string(failure.error_positions[i]);
        }
        out += ',' + failure.reason;
        out += '\n';
    }
    return out;
}

} // namespace qsc
