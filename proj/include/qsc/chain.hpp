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

#ifndef QSC_CHAIN_HPP
#define QSC_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/cyclic.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/*
   For a Mersenne prime p = 2^l - 1 the residue generator splits into
   m = (2^(l-1) - 1) / l irreducible degree-l factors, one per 2-cyclotomic
   coset inside the residue set. Deleting factors (largest coset
   representative first) walks a strictly increasing chain of cyclic
   supercodes, every one of them dual-containing; the chain feeds the
   synchronizable-code construction below.
*/

struct FactorChain {
    std::uint64_t p = 0;
    std::uint64_t l = 0;
    // coset representatives, ascending; factors[i] is the minimal polynomial
    // of the representative reps[i]
    std::vector<std::uint64_t> reps;
    std::vector<Poly> factors;
    // codes[z] = code generated by the product of all but the last z factors
    std::vector<CyclicCode> codes;
};

// l must make 2^l - 1 prime
FactorChain mersenne_chain(std::uint64_t l);

// code after the given number of deletions; deletions may equal the factor
// count, yielding the full space
CyclicCode chain_code(const FactorChain& chain, std::size_t deletions);

// every factor-subset code (2^m of them), in subset-mask order
std::vector<CyclicCode> all_factor_subset_codes(const FactorChain& chain);

// g2 / g1 for a strict subcode pair c2 < c1 of equal length
Poly quotient_f(const CyclicCode& c1, const CyclicCode& c2);

// checks the prime-length order law: for f | x^p - 1, f != 1, coprime to
// x - 1, returns ord(f) and insists it equals p
std::uint64_t verify_lemma3(const Poly& f, std::uint64_t p);

// parameters of one synchronizable code instance built from a dual-containing
// c2 strictly inside c1
struct QsyncParams {
    std::uint64_t n = 0;   // base length
    std::uint64_t c_l = 0; // left margin
    std::uint64_t c_r = 0; // right margin
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t dim_q = 0; // logical qubits, 2*k2 - n
    Poly f;                  // g2 / g1
    std::uint64_t ord_f = 0;
    std::optional<std::uint64_t> d1; // exact distances when enumerable
    std::optional<std::uint64_t> d2;
    std::optional<std::uint64_t> t_bit;   // (d1-1)/2
    std::optional<std::uint64_t> t_phase; // (d2-1)/2
    CyclicCode c1;
    CyclicCode c2;
};

// requires c2^perp <= c2 < c1 and c_l + c_r < ord(g2/g1)
QsyncParams qsync_params(const CyclicCode& c1, const CyclicCode& c2, std::uint64_t c_l,
                         std::uint64_t c_r, std::uint64_t distance_cap = 24);

struct Theorem2Row {
    std::uint64_t z = 0;
    std::uint64_t k2 = 0;
    std::uint64_t dim_q = 0;     // 2*z*l + 1
    std::uint64_t max_shift = 0; // highest supported c_l + c_r, always p - 1
};

// one row per deletion count z = 0 .. z_max; default z_max is the largest
// valid value, factor count - 1 = (2^(l-1) - l - 1) / l
std::vector<Theorem2Row> theorem2_table(std::uint64_t l,
                                        std::optional<std::uint64_t> z_max = std::nullopt);

} // namespace qsc

#endif // QSC_CHAIN_HPP
