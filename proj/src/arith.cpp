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

#include "qsc/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsc {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m == 0) { throw std::invalid_argument("zero modulus"); }
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) { throw std::invalid_argument("zero modulus"); }
    if (m == 1) { return 0; }
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) { result = mul_mod(result, base, m); }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) { return false; }
    for (const std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                  29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) { return n == p; }
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++r;
    }
    // base set proven sufficient for all n < 2^64
    for (const std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                  29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) { continue; }
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) { return false; }
    }
    return true;
}

std::uint64_t mult_order_of_two(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("odd prime required");
    }
    std::uint64_t t = 1;
    std::uint64_t pow = 2 % p;
    while (pow != 1) {
        pow = mul_mod(pow, 2, p);
        ++t;
    }
    return t;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("odd prime required");
    }
    std::vector<std::uint64_t> out;
    out.reserve((p - 1) / 2);
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) { out.push_back(mul_mod(x, x, p)); }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("odd prime required");
    }
    a %= p;
    if (a == 0) { throw std::invalid_argument("zero is neither residue class"); }
    return pow_mod(a, (p - 1) / 2, p) == 1;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n) {
    if (n == 0 || n % 2 == 0) { throw std::invalid_argument("odd modulus required"); }
    if (s >= n) { throw std::invalid_argument("representative out of range"); }
    std::vector<std::uint64_t> out;
    std::uint64_t cur = s;
    do {
        out.push_back(cur);
        cur = mul_mod(cur, 2, n);
    } while (cur != s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n) {
    if (n == 0 || n % 2 == 0) { throw std::invalid_argument("odd modulus required"); }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (seen[s]) { continue; }
        auto coset = cyclotomic_coset(s, n);
        for (const auto v : coset) { seen[v] = true; }
        out.push_back(std::move(coset));
    }
    return out;
}

} // namespace qsc
