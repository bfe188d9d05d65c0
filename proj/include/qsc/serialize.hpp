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

#ifndef QSC_SERIALIZE_HPP
#define QSC_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qsc/chain.hpp"
#include "qsc/cyclic.hpp"
#include "qsc/poly.hpp"
#include "qsc/syncsim.hpp"

namespace qsc {

// key order is part of the output contract, hence ordered_json throughout
using Json = nlohmann::ordered_json;

struct MinDistanceRecord {
    std::uint64_t value = 0;
    bool exact = false;
};

struct CodeRecord {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    Poly generator;
    Poly dual_generator;
    bool dual_containing = false;
    std::optional<MinDistanceRecord> min_distance;
};

CodeRecord make_code_record(const CyclicCode& code, std::optional<MinDistanceRecord> min_distance);

// both pinned text forms of one polynomial
Json poly_json(const Poly& p);

Json to_json(const CodeRecord& record);
// inverse of to_json; text and hex forms must agree
CodeRecord code_record_from_json(const Json& j);

Json to_json(const QsyncParams& params);
Json to_json(const TrialSummary& summary, const QsyncParams& params);
Json to_json(const Theorem2Row& row);

// CSV: header row + one line per record; cells are numerals, hex strings or
// polynomial text, none of which need quoting
std::string code_records_csv(std::span<const std::pair<std::string, CodeRecord>> records);
std::string chain_factors_csv(const FactorChain& chain);
std::string trial_failures_csv(const TrialSummary& summary);

} // namespace qsc

#endif // QSC_SERIALIZE_HPP
