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

#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "qsc/arith.hpp"
#include "qsc/chain.hpp"
#include "qsc/cyclic.hpp"
#include "qsc/field.hpp"
#include "qsc/poly.hpp"
#include "qsc/qr.hpp"
#include "qsc/serialize.hpp"
#include "qsc/syncsim.hpp"

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", opts.output, "write to a file instead of stdout");
    sub->add_option("--seed", opts.seed, "master RNG seed");
}

void write_body(const CommonOpts& opts, const std::string& body) {
    if (opts.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) { throw std::invalid_argument("cannot open output file: " + opts.output); }
    out << body;
}

std::uint64_t mersenne_exponent(std::uint64_t p) {
    // p = 2^l - 1 exactly when p + 1 is a power of two
    if (p < 7 || (p & (p + 1)) != 0) {
        throw std::invalid_argument("p must be a Mersenne prime 2^l - 1 with l >= 3");
    }
    return static_cast<std::uint64_t>(std::bit_width(p));
}

std::optional<qsc::MinDistanceRecord> distance_record(const qsc::CyclicCode& code,
                                                      std::uint64_t cap, bool allow_bound,
                                                      std::uint64_t p) {
    if (const auto d = qsc::try_min_distance(code, cap)) {
        return qsc::MinDistanceRecord{.value = *d, .exact = true};
    }
    if (allow_bound) {
        return qsc::MinDistanceRecord{.value = qsc::square_root_bound(p), .exact = false};
    }
    return std::nullopt;
}

std::string lemma2_text(const qsc::Lemma2Report& report) {
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string out = "lemma2:";
    out += std::string(" residue_dual_is_bar=") + flag(report.residue_dual_is_bar);
    out += std::string(" nonresidue_dual_is_bar=") + flag(report.nonresidue_dual_is_bar);
    out += std::string(" residue_dual_containing=") + flag(report.residue_dual_containing);
    out += std::string(" nonresidue_dual_containing=") + flag(report.nonresidue_dual_containing);
    out += std::string(" all_hold=") + flag(report.all_hold());
    out += '\n';
    return out;
}

qsc::Json lemma2_json(const qsc::Lemma2Report& report) {
    qsc::Json j;
    j["residue_dual_is_bar"] = report.residue_dual_is_bar;
    j["nonresidue_dual_is_bar"] = report.nonresidue_dual_is_bar;
    j["residue_dual_containing"] = report.residue_dual_containing;
    j["nonresidue_dual_containing"] = report.nonresidue_dual_containing;
    j["all_hold"] = report.all_hold();
    return j;
}

std::string code_text_line(const std::string& name, const qsc::CodeRecord& record) {
    std::string out = name + ": [" + std::to_string(record.n) + "," + std::to_string(record.k) +
                      "] g=" + record.generator.to_text() + " (" + record.generator.to_hex() +
                      ") dual_containing=" + (record.dual_containing ? "true" : "false");
    if (record.min_distance) {
        out += " d=" + std::to_string(record.min_distance->value) +
               (record.min_distance->exact ? " (exact)" : " (lower bound)");
    }
    out += '\n';
    return out;
}

int run_qr(const CommonOpts& opts, std::uint64_t p, bool lemma2, bool with_distance,
           std::uint64_t cap) {
    const qsc::QrFamily family = qsc::build_qr_family(p);
    std::vector<std::pair<std::string, qsc::CodeRecord>> records;
    const auto record = [&](const std::string& name, const qsc::CyclicCode& code) {
        std::optional<qsc::MinDistanceRecord> d;
        if (with_distance) { d = distance_record(code, cap, /*allow_bound=*/true, p); }
        records.emplace_back(name, qsc::make_code_record(code, d));
    };
    record("residue", family.residue_code());
    record("nonresidue", family.nonresidue_code());
    record("residue_bar", family.residue_bar());
    record("nonresidue_bar", family.nonresidue_bar());

    std::optional<qsc::Lemma2Report> report;
    if (lemma2) { report = qsc::verify_lemma2(family); }

    std::string body;
    if (opts.format == "json") {
        qsc::Json j;
        j["p"] = p;
        qsc::Json field;
        field["t"] = family.field()->t();
        field["modulus"] = qsc::poly_json(family.field()->modulus());
        field["alpha"] = qsc::poly_json(family.alpha().rep());
        j["field"] = std::move(field);
        qsc::Json codes;
        for (const auto& [name, rec] : records) { codes[name] = qsc::to_json(rec); }
        j["codes"] = std::move(codes);
        if (report) { j["lemma2"] = lemma2_json(*report); }
        body = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        body = qsc::code_records_csv(records);
    } else {
        body = "p: " + std::to_string(p) + "\n";
        body += "field: t=" + std::to_string(family.field()->t()) +
                " modulus=" + family.field()->modulus().to_text() +
                " alpha=" + family.alpha().rep().to_text() + "\n";
        for (const auto& [name, rec] : records) { body += code_text_line(name, rec); }
        if (report) { body += lemma2_text(*report); }
    }
    write_body(opts, body);
    if (report && !report->all_hold()) {
        std::cerr << "internal error: duality structure verification failed\n";
        return 1;
    }
    return 0;
}

int run_chain(const CommonOpts& opts, std::uint64_t l, std::optional<std::uint64_t> z_max) {
    const qsc::FactorChain chain = qsc::mersenne_chain(l);
    const auto rows = qsc::theorem2_table(l, z_max);

    std::string body;
    if (opts.format == "json") {
        qsc::Json j;
        j["l"] = chain.l;
        j["p"] = chain.p;
        qsc::Json factors = qsc::Json::array();
        for (std::size_t i = 0; i < chain.factors.size(); ++i) {
            qsc::Json f;
            f["rep"] = chain.reps[i];
            f["degree"] = chain.factors[i].degree().value_or(0);
            f["factor"] = qsc::poly_json(chain.factors[i]);
            factors.push_back(std::move(f));
        }
        j["factors"] = std::move(factors);
        qsc::Json codes = qsc::Json::array();
        for (std::size_t z = 0; z < chain.codes.size(); ++z) {
            qsc::Json c;
            c["z"] = z;
            c["n"] = chain.codes[z].length();
            c["k"] = chain.codes[z].dim();
            c["generator"] = qsc::poly_json(chain.codes[z].generator());
            codes.push_back(std::move(c));
        }
        j["codes"] = std::move(codes);
        qsc::Json table = qsc::Json::array();
        for (const auto& row : rows) { table.push_back(qsc::to_json(row)); }
        j["table"] = std::move(table);
        body = j.dump(2) + "\n";
    } else if (opts.format == "csv") {
        body = qsc::chain_factors_csv(chain);
    } else {
        body = "l: " + std::to_string(chain.l) + "  p: " + std::to_string(chain.p) + "\n";
        body += "factors: " + std::to_string(chain.factors.size()) + "\n";
        for (std::size_t i = 0; i < chain.factors.size(); ++i) {
            body += "  rep=" + std::to_string(chain.reps[i]) +
                    " factor=" + chain.factors[i].to_text() + " (" + chain.factors[i].to_hex() +
                    ")\n";
        }
        body += "codes:\n";
        for (std::size_t z = 0; z < chain.codes.size(); ++z) {
            body += "  z=" + std::to_string(z) + " [" + std::to_string(chain.codes[z].length()) +
                    "," + std::to_string(chain.codes[z].dim()) +
                    "] g=" + chain.codes[z].generator().to_text() + "\n";
        }
        body += "table:\n";
        for (const auto& row : rows) {
            body += "  z=" + std::to_string(row.z) + " k2=" + std::to_string(row.k2) +
                    " dim_q=" + std::to_string(row.dim_q) +
                    " max_shift=" + std::to_string(row.max_shift) + "\n";
        }
    }
    write_body(opts, body);
    return 0;
}

qsc::QsyncParams build_pair(std::uint64_t p, std::uint64_t z, std::uint64_t y, std::uint64_t c_l,
                            std::uint64_t c_r, std::uint64_t cap) {
    const std::uint64_t l = mersenne_exponent(p);
    const qsc::FactorChain chain = qsc::mersenne_chain(l);
    if (y == 0) { throw std::invalid_argument("y must be at least 1"); }
    if (z + y > chain.factors.size()) {
        throw std::invalid_argument("z + y exceeds the factor count");
    }
    const qsc::CyclicCode c2 = qsc::chain_code(chain, z);
    const qsc::CyclicCode c1 = qsc::chain_code(chain, z + y);
    return qsc::qsync_params(c1, c2, c_l, c_r, cap);
}

std::string params_text(const qsc::QsyncParams& params) {
    const auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string("unknown");
    };
    std::string body;
    body += "n=" + std::to_string(params.n) + " c_l=" + std::to_string(params.c_l) +
            " c_r=" + std::to_string(params.c_r) +
            " length=" + std::to_string(params.n + params.c_l + params.c_r) + "\n";
    body += "k1=" + std::to_string(params.k1) + " k2=" + std::to_string(params.k2) +
            " dim_q=" + std::to_string(params.dim_q) + "\n";
    body += "f=" + params.f.to_text() + " (" + params.f.to_hex() +
            ") ord_f=" + std::to_string(params.ord_f) + "\n";
    body += "d1=" + opt(params.d1) + " d2=" + opt(params.d2) + " t_bit=" + opt(params.t_bit) +
            " t_phase=" + opt(params.t_phase) + "\n";
    return body;
}

std::string params_csv(const qsc::QsyncParams& params) {
    const auto opt = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    std::string body = "n,c_l,c_r,length,k1,k2,dim_q,f,f_hex,ord_f,d1,d2,t_bit,t_phase\n";
    body += std::to_string(params.n) + ',' + std::to_string(params.c_l) + ',' +
            std::to_string(params.c_r) + ',' +
            std::to_string(params.n + params.c_l + params.c_r) + ',' +
            std::to_string(params.k1) + ',' + std::to_string(params.k2) + ',' +
            std::to_string(params.dim_q) + ',' + params.f.to_text() + ',' + params.f.to_hex() +
            ',' + std::to_string(params.ord_f) + ',' + opt(params.d1) + ',' + opt(params.d2) +
            ',' + opt(params.t_bit) + ',' + opt(params.t_phase) + '\n';
    return body;
}

int run_params(const CommonOpts& opts, std::uint64_t p, std::uint64_t z, std::uint64_t y,
               std::uint64_t c_l, std::uint64_t c_r, std::uint64_t cap) {
    const qsc::QsyncParams params = build_pair(p, z, y, c_l, c_r, cap);
    std::string body;
    if (opts.format == "json") {
        body = qsc::to_json(params).dump(2) + "\n";
    } else if (opts.format == "csv") {
        body = params_csv(params);
    } else {
        body = params_text(params);
    }
    write_body(opts, body);
    return 0;
}

int run_simulate(const CommonOpts& opts, std::uint64_t p, std::uint64_t z, std::uint64_t y,
                 std::uint64_t c_l, std::uint64_t c_r, std::uint64_t trials,
                 std::uint64_t max_errors) {
    const qsc::QsyncParams params = build_pair(p, z, y, c_l, c_r, /*cap=*/24);
    const qsc::TrialSummary summary = qsc::run_trials(params, trials, max_errors, opts.seed);

    std::string body;
    if (opts.format == "json") {
        body = qsc::to_json(summary, params).dump(2) + "\n";
    } else if (opts.format == "csv") {
        body = qsc::trial_failures_csv(summary);
    } else {
        body = "trials=" + std::to_string(summary.trials) +
               " successes=" + std::to_string(summary.successes) +
               " failures=" + std::to_string(summary.failures.size()) +
               " max_errors=" + std::to_string(summary.max_errors) +
               " seed=" + std::to_string(summary.seed) + "\n";
    }
    write_body(opts, body);

    const bool guaranteed = max_errors == 0 || (params.t_bit && max_errors <= *params.t_bit);
    if (guaranteed && summary.successes != summary.trials) {
        std::cerr << "internal error: guaranteed recovery regime fell short of 100%\n";
        return 1;
    }
    return 0;
}

int run_mindist(const CommonOpts& opts, std::uint64_t p, std::uint64_t z, std::uint64_t cap) {
    qsc::CyclicCode code = [&] {
        if (z == 0) { return qsc::build_qr_family(p).residue_code(); }
        const std::uint64_t l = mersenne_exponent(p);
        const qsc::FactorChain chain = qsc::mersenne_chain(l);
        if (z >= chain.factors.size()) {
            throw std::invalid_argument("z exceeds the deletable factor count");
        }
        return qsc::chain_code(chain, z);
    }();
    // the square-root floor applies to the residue code only
    const auto d = distance_record(code, cap, /*allow_bound=*/z == 0, p);
    const qsc::CodeRecord record = qsc::make_code_record(code, d);

    std::string body;
    if (opts.format == "json") {
        body = qsc::to_json(record).dump(2) + "\n";
    } else if (opts.format == "csv") {
        const std::vector<std::pair<std::string, qsc::CodeRecord>> records = {
            {z == 0 ? "residue" : "chain_z" + std::to_string(z), record}};
        body = qsc::code_records_csv(records);
    } else {
        body = "n=" + std::to_string(record.n) + " k=" + std::to_string(record.k);
        if (record.min_distance) {
            body += " d=" + std::to_string(record.min_distance->value) +
                    " exact=" + (record.min_distance->exact ? "true" : "false");
        } else {
            body += " d=unknown";
        }
        body += "\n";
    }
    write_body(opts, body);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum synchronizable codes from cyclic residue-code chains"};
    app.require_subcommand(1);

    CommonOpts opts;
    int rc = 0;

    auto* qr = app.add_subcommand("qr", "construct the residue-code family for a prime");
    std::uint64_t qr_p = 0;
    bool qr_lemma2 = false;
    bool qr_dist = false;
    std::uint64_t qr_cap = 24;
    qr->add_option("--p", qr_p, "prime length")->required();
    qr->add_flag("--verify-lemma2", qr_lemma2, "check the duality structure (p = 8m - 1)");
    qr->add_flag("--min-distance", qr_dist, "report minimum distances");
    qr->add_option("--cap", qr_cap, "dimension cap for exact distance enumeration");
    add_common(qr, opts);
    qr->callback([&] { rc = run_qr(opts, qr_p, qr_lemma2, qr_dist, qr_cap); });

    auto* chain = app.add_subcommand("chain", "factor chain and parameter table for 2^l - 1");
    std::uint64_t chain_l = 0;
    std::uint64_t chain_zmax = 0;
    chain->add_option("--l", chain_l, "Mersenne exponent")->required();
    auto* zmax_opt = chain->add_option("--z-max", chain_zmax, "truncate the parameter table");
    add_common(chain, opts);
    chain->callback([&] {
        std::optional<std::uint64_t> zm;
        if (zmax_opt->count() > 0) { zm = chain_zmax; }
        rc = run_chain(opts, chain_l, zm);
    });

    auto* params = app.add_subcommand("params", "parameters of one synchronizable-code pair");
    std::uint64_t pr_p = 0, pr_z = 0, pr_y = 1, pr_cl = 0, pr_cr = 0, pr_cap = 24;
    params->add_option("--p", pr_p, "Mersenne prime length")->required();
    params->add_option("--z", pr_z, "factor deletions for the inner code");
    params->add_option("--y", pr_y, "extra deletions for the outer code");
    params->add_option("--cl", pr_cl, "left margin")->required();
    params->add_option("--cr", pr_cr, "right margin")->required();
    params->add_option("--cap", pr_cap, "dimension cap for exact distance enumeration");
    add_common(params, opts);
    params->callback([&] { rc = run_params(opts, pr_p, pr_z, pr_y, pr_cl, pr_cr, pr_cap); });

    auto* sim = app.add_subcommand("simulate", "Monte Carlo misalignment recovery");
    std::uint64_t sm_p = 0, sm_z = 0, sm_y = 1, sm_cl = 0, sm_cr = 0, sm_trials = 0,
                  sm_max_errors = 0;
    sim->add_option("--p", sm_p, "Mersenne prime length")->required();
    sim->add_option("--z", sm_z, "factor deletions for the inner code");
    sim->add_option("--y", sm_y, "extra deletions for the outer code");
    sim->add_option("--cl", sm_cl, "left margin")->required();
    sim->add_option("--cr", sm_cr, "right margin")->required();
    sim->add_option("--trials", sm_trials, "trial count")->required();
    sim->add_option("--max-errors", sm_max_errors, "per-trial error weight bound");
    add_common(sim, opts);
    sim->callback(
        [&] { rc = run_simulate(opts, sm_p, sm_z, sm_y, sm_cl, sm_cr, sm_trials, sm_max_errors); });

    auto* mindist = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    std::uint64_t md_p = 0, md_z = 0, md_cap = 24;
    mindist->add_option("--p", md_p, "prime length")->required();
    mindist->add_option("--z", md_z, "factor deletions (0 = residue code)");
    mindist->add_option("--cap", md_cap, "dimension cap for exact distance enumeration");
    add_common(mindist, opts);
    mindist->callback([&] { rc = run_mindist(opts, md_p, md_z, md_cap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
