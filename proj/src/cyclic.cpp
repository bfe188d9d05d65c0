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

#include "qsc/cyclic.hpp"

#include <bit>
#include <stdexcept>

namespace qsc {

CyclicCode::CyclicCode(std::uint64_t n, Poly g) : n_(n), g_(std::move(g)) {
    if (n_ == 0) { throw std::invalid_argument("not a cyclic code generator"); }
    if (g_.is_zero()) { throw std::invalid_argument("not a cyclic code generator"); }
    const Poly modulus = Poly::x_n_minus_1(n_);
    auto [quot, rem] = divrem(modulus, g_);
    if (!rem.is_zero() || *g_.degree() > n_) {
        throw std::invalid_argument("not a cyclic code generator");
    }
    h_ = std::move(quot);
    k_ = n_ - *g_.degree();
}

bool CyclicCode::contains_word(const Poly& w) const {
    if (const auto d = w.degree(); d && *d >= n_) {
        throw std::invalid_argument("word degree exceeds code length");
    }
    return divrem(w, g_).rem.is_zero();
}

CyclicCode dual(const CyclicCode& c) {
    // h is never zero and reciprocal keeps h(0) = 1 divisors of x^n - 1 valid;
    // full space and zero code swap under this map
    return CyclicCode(c.length(), reciprocal(c.check_poly()));
}

bool contains(const CyclicCode& outer, const CyclicCode& inner) {
    if (outer.length() != inner.length()) {
        throw std::invalid_argument("code length mismatch");
    }
    return divrem(inner.generator(), outer.generator()).rem.is_zero();
}

bool is_dual_containing(const CyclicCode& c) { return contains(c, dual(c)); }

Poly encode(const CyclicCode& c, const Poly& message) {
    if (const auto d = message.degree(); d && *d >= c.dim()) {
        throw std::invalid_argument("message degree exceeds dimension");
    }
    return message * c.generator();
}

ParityCheck::ParityCheck(const CyclicCode& c) : n_(c.length()) {
    if (c.dim() == c.length()) { throw std::invalid_argument("no parity constraints"); }
    const Poly gd = dual(c).generator(); // degree k
    const std::uint64_t r = n_ - c.dim();
    rows_.reserve(r);
    for (std::uint64_t i = 0; i < r; ++i) {
        rows_.push_back(BitVec::from_poly(gd << i, n_));
    }
    // rows are g_dual * x^i with strictly increasing leading degree k + i, a
    // triangular (hence full-rank) set; verify the leading terms line up
    for (std::uint64_t i = 0; i < r; ++i) {
        const Poly p = rows_[i].to_poly();
        if (p.is_zero() || *p.degree() != c.dim() + i) {
            throw std::logic_error("parity rows rank deficient");
        }
    }
}

BitVec ParityCheck::syndrome(const BitVec& v) const {
    if (v.size() != n_) { throw std::invalid_argument("word length mismatch"); }
    BitVec s(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) { s.set(i, dot(rows_[i], v)); }
    return s;
}

std::optional<std::uint64_t> try_min_distance(const CyclicCode& c, std::uint64_t cap_k) {
    if (c.dim() == 0) { throw std::invalid_argument("zero code has no nonzero codewords"); }
    if (c.dim() > cap_k || c.dim() >= 64) { return std::nullopt; }
    const std::uint64_t k = c.dim();
    const std::size_t words = (c.length() + 63) / 64;
    // codeword accumulator walks messages in Gray order: one shifted-generator
    // xor per step
    std::vector<std::vector<std::uint64_t>> shifts;
    shifts.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::vector<std::uint64_t> row(words, 0);
        const Poly p = c.generator() << i;
        const auto& src = p.words();
        for (std::size_t w = 0; w < src.size(); ++w) { row[w] = src[w]; }
        shifts.push_back(std::move(row));
    }
    std::vector<std::uint64_t> acc(words, 0);
    std::uint64_t best = UINT64_MAX;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t m = 1; m < total; ++m) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(m));
        const auto& row = shifts[bit];
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            acc[i] ^= row[i];
            w += static_cast<std::uint64_t>(std::popcount(acc[i]));
        }
        if (w < best) { best = w; }
    }
    return best;
}

std::uint64_t min_distance(const CyclicCode& c, std::uint64_t cap_k) {
    const auto d = try_min_distance(c, cap_k);
    if (!d) { throw std::invalid_argument("dimension exceeds enumeration cap"); }
    return *d;
}

} // namespace qsc
