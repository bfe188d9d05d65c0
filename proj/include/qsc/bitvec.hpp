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

#ifndef QSC_BITVEC_HPP
#define QSC_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

// Fixed-length GF(2) vector. Index i corresponds to coefficient of x^i under
// to_poly()/from_poly(); bits above size() are kept zero.
class BitVec {
  public:
    BitVec() noexcept = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    // requires deg(p) < n
    static BitVec from_poly(const Poly& p, std::size_t n);
    [[nodiscard]] Poly to_poly() const { return Poly::from_words(words_); }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return weight() == 0; }

    BitVec& operator^=(const BitVec& rhs);
    friend BitVec operator^(BitVec lhs, const BitVec& rhs) { lhs ^= rhs; return lhs; }
    friend bool operator==(const BitVec&, const BitVec&) noexcept = default;

    // packs the bits into one word; requires size() <= 64
    [[nodiscard]] std::uint64_t as_key() const;

    // GF(2) inner product (parity of the AND); sizes must match
    friend bool dot(const BitVec& a, const BitVec& b);

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace qsc

#endif // QSC_BITVEC_HPP
