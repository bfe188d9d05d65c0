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

#include "qsc/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsc/arith.hpp"
#include "qsc/field.hpp"
#include "qsc/qr.hpp"

namespace qsc {

FactorChain mersenne_chain(std::uint64_t l) {
    if (l < 3 || l > 62) { throw std::invalid_argument("exponent out of range"); }
    const std::uint64_t p = (std::uint64_t{1} << l) - 1;
    if (!is_prime(p)) { throw std::invalid_argument("2^l - 1 must be prime"); }

    FactorChain chain;
    chain.p = p;
    chain.l = l;

    const FieldCtxPtr field = build_field(p);
    const FieldElem alpha = primitive_root_of_unity(field);

    // p = 8m - 1 for l >= 3, so 2 is a residue and the residue set is a
    // union of cyclotomic cosets; collect their representatives ascending
    const auto residues = quadratic_residues(p);
    std::vector<bool> is_res(p, false);
    for (const auto r : residues) { is_res[r] = true; }
    for (std::uint64_t s = 1; s < p; ++s) {
        if (!is_res[s]) { continue; }
        const auto coset = cyclotomic_coset(s, p);
        if (coset.front() != s) { continue; } // not the smallest member
        if (coset.size() != l) { throw std::logic_error("residue coset size differs from l"); }
        chain.reps.push_back(s);
        chain.factors.push_back(minimal_polynomial(alpha, s));
    }
    const std::uint64_t expected = ((std::uint64_t{1} << (l - 1)) - 1) / l;
    if (chain.reps.size() != expected) {
        throw std::logic_error("residue factor count differs from (2^(l-1) - 1) / l");
    }

    chain.codes.reserve(chain.factors.size());
    for (std::size_t z = 0; z < chain.factors.size(); ++z) {
        chain.codes.push_back(chain_code(chain, z));
    }
    return chain;
}

CyclicCode chain_code(const FactorChain& chain, std::size_t deletions) {
    if (deletions > chain.factors.size()) {
        throw std::invalid_argument("deletion count exceeds factor count");
    }
    Poly g = Poly::one();
    for (std::size_t i = 0; i + deletions < chain.factors.size(); ++i) { g *= chain.factors[i]; }
    return CyclicCode(chain.p, g);
}

std::vector<CyclicCode> all_factor_subset_codes(const FactorChain& chain) {
    const std::size_t m = chain.factors.size();
    if (m >= 20) { throw std::invalid_argument("too many factors to enumerate subsets"); }
    std::vector<CyclicCode> out;
    out.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Poly g = Poly::one();
        for (std::size_t i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) { g *= chain.factors[i]; }
        }
        out.emplace_back(chain.p, g);
    }
    return out;
}

Poly quotient_f(const CyclicCode& c1, const CyclicCode& c2) {
    if (!contains(c1, c2)) { throw std::invalid_argument("codes do not form a subcode pair"); }
    if (c1 == c2) { throw std::invalid_argument("subcode pair must be strict"); }
    return divrem(c2.generator(), c1.generator()).quot;
}

std::uint64_t verify_lemma3(const Poly& f, std::uint64_t p) {
    if (!is_prime(p) || p % 2 == 0) { throw std::invalid_argument("odd prime length required"); }
    if (f.is_one() || f.is_zero()) { throw std::invalid_argument("quotient must be nontrivial"); }
    if (!divrem(Poly::x_n_minus_1(p), f).rem.is_zero()) {
        throw std::invalid_argument("quotient must divide x^p - 1");
    }
    if (!gcd(f, Poly::from_exponents({0, 1})).is_one()) {
        throw std::invalid_argument("quotient must be coprime to x - 1");
    }
    const std::uint64_t ord = order(f, p);
    if (ord != p) { throw std::logic_error("prime-length quotient order differs from p"); }
    return ord;
}

QsyncParams qsync_params(const CyclicCode& c1, const CyclicCode& c2, std::uint64_t c_l,
                         std::uint64_t c_r, std::uint64_t distance_cap) {
    if (!contains(c1, c2) || c1 == c2) {
        throw std::invalid_argument("expected a strict subcode pair");
    }
    if (!is_dual_containing(c2)) {
        throw std::invalid_argument("inner code must contain its dual");
    }
    const std::uint64_t n = c1.length();
    if (2 * c2.dim() <= n) {
        throw std::invalid_argument("logical dimension must be positive");
    }

    QsyncParams params{.n = n,
                       .c_l = c_l,
                       .c_r = c_r,
                       .k1 = c1.dim(),
                       .k2 = c2.dim(),
                       .dim_q = 2 * c2.dim() - n,
                       .f = quotient_f(c1, c2),
                       .ord_f = 0,
                       .d1 = std::nullopt,
                       .d2 = std::nullopt,
                       .t_bit = std::nullopt,
                       .t_phase = std::nullopt,
                       .c1 = c1,
                       .c2 = c2};
    params.ord_f = order(params.f, n);
    if (c_l + c_r >= params.ord_f) {
        throw std::invalid_argument("misalignment tolerance exceeds quotient order");
    }
    if (c1.dim() < n) { // full space has no nonzero-distance notion to report
        params.d1 = try_min_distance(c1, distance_cap);
    }
    params.d2 = try_min_distance(c2, distance_cap);
    if (params.d1) { params.t_bit = (*params.d1 - 1) / 2; }
    if (params.d2) { params.t_phase = (*params.d2 - 1) / 2; }
    return params;
}

std::vector<Theorem2Row> theorem2_table(std::uint64_t l, std::optional<std::uint64_t> z_max) {
    const FactorChain chain = mersenne_chain(l);
    const std::uint64_t m = chain.factors.size();
    const std::uint64_t top = z_max.value_or(m - 1);
    if (top > m - 1) { throw std::invalid_argument("z exceeds (2^(l-1) - l - 1) / l"); }
    std::vector<Theorem2Row> rows;
    rows.reserve(top + 1);
    for (std::uint64_t z = 0; z <= top; ++z) {
        const CyclicCode& c2 = chain.codes[z];
        const CyclicCode c1 = chain_code(chain, z + 1);
        const std::uint64_t c_l = (chain.p - 1) / 2;
        const std::uint64_t c_r = chain.p - 1 - c_l;
        QsyncParams params = qsync_params(c1, c2, c_l, c_r, /*distance_cap=*/0);
        if (params.ord_f != chain.p) { throw std::logic_error("quotient order differs from p"); }
        if (params.dim_q != 2 * z * l + 1) {
            throw std::logic_error("logical dimension differs from 2zl + 1");
        }
        rows.push_back(Theorem2Row{.z = z,
                                   .k2 = params.k2,
                                   .dim_q = params.dim_q,
                                   .max_shift = chain.p - 1});
    }
    return rows;
}

} // namespace qsc
