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

#ifndef QSC_CYCLIC_HPP
#define QSC_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsc/bitvec.hpp"
#include "qsc/poly.hpp"

namespace qsc {

// [n, k] cyclic code = the ideal generated by g in GF(2)[x]/(x^n - 1).
// Requires g | x^n - 1; k = n - deg(g). deg(g) = 0 gives the full space,
// deg(g) = n (g = x^n - 1, reduced to the zero ideal) gives the zero code.
class CyclicCode {
  public:
    CyclicCode(std::uint64_t n, Poly g);

    [[nodiscard]] std::uint64_t length() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t dim() const noexcept { return k_; }
    [[nodiscard]] const Poly& generator() const noexcept { return g_; }
    // h with g * h = x^n - 1
    [[nodiscard]] const Poly& check_poly() const noexcept { return h_; }

    // deg(w) < n and g | w
    [[nodiscard]] bool contains_word(const Poly& w) const;

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) noexcept {
        return a.n_ == b.n_ && a.g_ == b.g_;
    }

  private:
    std::uint64_t n_;
    std::uint64_t k_;
    Poly g_;
    Poly h_;
};

/* free functions wrt. CyclicCode */

// generator x^k * h(1/x), the reversed check polynomial
CyclicCode dual(const CyclicCode& c);

// subcode relation: every codeword of inner lies in outer (g_outer | g_inner)
bool contains(const CyclicCode& outer, const CyclicCode& inner);

bool is_dual_containing(const CyclicCode& c);

// message (deg < k) -> codeword polynomial message * g
Poly encode(const CyclicCode& c, const Poly& message);

// rows span the dual: row i is the dual generator shifted by i, i < n - k.
// Verified full rank at construction. Unavailable for the full space (k = n).
class ParityCheck {
  public:
    explicit ParityCheck(const CyclicCode& c);

    [[nodiscard]] std::uint64_t length() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] const BitVec& row(std::size_t i) const { return rows_.at(i); }

    [[nodiscard]] BitVec syndrome(const BitVec& v) const;

  private:
    std::uint64_t n_;
    std::vector<BitVec> rows_;
};

// exact minimum distance by Gray-code sweep of all 2^k - 1 nonzero messages;
// disengaged when k exceeds cap_k. Zero code (k = 0) is an error.
std::optional<std::uint64_t> try_min_distance(const CyclicCode& c, std::uint64_t cap_k = 24);

// as above but throws instead of disengaging
std::uint64_t min_distance(const CyclicCode& c, std::uint64_t cap_k = 24);

} // namespace qsc

#endif // QSC_CYCLIC_HPP
