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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qsc/arith.hpp"

TEST_CASE("primality on knowns") {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 23, 31, 47, 71, 79, 103, 127, 8191};
    for (const auto p : primes) { CHECK(qsc::is_prime(p)); }
    const std::vector<std::uint64_t> composites = {0, 1, 4, 15, 33, 91, 2047, 8128};
    for (const auto c : composites) { CHECK(!qsc::is_prime(c)); }
    // 2^61 - 1 is prime, 2^67 - 1 is not
    CHECK(qsc::is_prime((std::uint64_t{1} << 61) - 1));
    CHECK(!qsc::is_prime((std::uint64_t{1} << 43) - 1));
}

TEST_CASE("multiplicative order of two") {
    CHECK(qsc::mult_order_of_two(7) == 3);
    CHECK(qsc::mult_order_of_two(23) == 11);
    CHECK(qsc::mult_order_of_two(31) == 5);
    CHECK(qsc::mult_order_of_two(47) == 23);
    CHECK(qsc::mult_order_of_two(71) == 35);
    CHECK(qsc::mult_order_of_two(79) == 39);
    CHECK(qsc::mult_order_of_two(103) == 51);
    CHECK(qsc::mult_order_of_two(127) == 7);
    CHECK_THROWS_AS((void)qsc::mult_order_of_two(15), std::invalid_argument);
    CHECK_THROWS_AS((void)qsc::mult_order_of_two(2), std::invalid_argument);
}

TEST_CASE("quadratic residues mod 31 match the square table") {
    const auto q = qsc::quadratic_residues(31);
    const std::vector<std::uint64_t> expected = {1, 2, 4,  5,  7,  8,  9, 10,
                                                 14, 16, 18, 19, 20, 25, 28};
    CHECK(q == expected);
    for (const auto v : expected) { CHECK(qsc::is_quadratic_residue(v, 31)); }
    CHECK(!qsc::is_quadratic_residue(3, 31));
    CHECK_THROWS_AS((void)qsc::is_quadratic_residue(0, 31), std::invalid_argument);
}

TEST_CASE("residue criterion: 2 is a square exactly for p = 8m +/- 1") {
    CHECK(qsc::is_quadratic_residue(2, 7));
    CHECK(qsc::is_quadratic_residue(2, 17));
    CHECK(qsc::is_quadratic_residue(2, 23));
    CHECK(qsc::is_quadratic_residue(2, 31));
    CHECK(!qsc::is_quadratic_residue(2, 3));
    CHECK(!qsc::is_quadratic_residue(2, 5));
    CHECK(!qsc::is_quadratic_residue(2, 11));
    CHECK(!qsc::is_quadratic_residue(2, 13));
}

TEST_CASE("cyclotomic cosets partition the index range") {
    const auto c1 = qsc::cyclotomic_coset(1, 31);
    const auto c5 = qsc::cyclotomic_coset(5, 31);
    const auto c7 = qsc::cyclotomic_coset(7, 31);
    CHECK(c1 == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
    CHECK(c5 == std::vector<std::uint64_t>{5, 9, 10, 18, 20});
    CHECK(c7 == std::vector<std::uint64_t>{7, 14, 19, 25, 28});
    CHECK(qsc::cyclotomic_coset(0, 31) == std::vector<std::uint64_t>{0});
    CHECK(qsc::cyclotomic_coset(9, 31) == c5); // any member names the coset

    for (const std::uint64_t n : {7ULL, 15ULL, 31ULL, 45ULL, 127ULL, 255ULL}) {
        const auto cosets = qsc::cyclotomic_cosets(n);
        std::set<std::uint64_t> seen;
        std::size_t total = 0;
        for (const auto& coset : cosets) {
            CHECK(std::is_sorted(coset.begin(), coset.end()));
            // closed under doubling
            for (const auto v : coset) {
                CHECK(std::binary_search(coset.begin(), coset.end(), (2 * v) % n));
            }
            for (const auto v : coset) { seen.insert(v); }
            total += coset.size();
        }
        CHECK(total == n);
        CHECK(seen.size() == n);
    }

    CHECK_THROWS_AS((void)qsc::cyclotomic_coset(31, 31), std::invalid_argument);
    CHECK_THROWS_AS((void)qsc::cyclotomic_coset(1, 8), std::invalid_argument);
}
