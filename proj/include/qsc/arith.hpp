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

#ifndef QSC_ARITH_HPP
#define QSC_ARITH_HPP

#include <cstdint>
#include <vector>

namespace qsc {

// deterministic for the full uint64 range (Miller-Rabin on a fixed base set)
bool is_prime(std::uint64_t n);

// (base^exp) mod m without overflow; m >= 1
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// multiplicative order of 2 modulo an odd prime p
std::uint64_t mult_order_of_two(std::uint64_t p);

// Legendre-style residue classification for odd prime p: the set of nonzero
// squares mod p, ascending
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);
bool is_quadratic_residue(std::uint64_t a, std::uint64_t p);

// 2-cyclotomic coset of s modulo odd n: {s, 2s, 4s, ...} mod n, ascending
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n);

// partition of {0, ..., n-1} into 2-cyclotomic cosets, each ascending,
// ordered by smallest representative
std::vector<std::vector<std::uint64_t>> cyclotomic_cosets(std::uint64_t n);

} // namespace qsc

#endif // QSC_ARITH_HPP
