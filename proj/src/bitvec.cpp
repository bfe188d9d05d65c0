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

#include "qsc/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace qsc {

BitVec BitVec::from_poly(const Poly& p, std::size_t n) {
    if (const auto d = p.degree(); d && *d >= n) {
        throw std::invalid_argument("polynomial degree exceeds vector length");
    }
    BitVec v(n);
    const auto& src = p.words();
    for (std::size_t i = 0; i < src.size(); ++i) { v.words_[i] = src[i]; }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= n_) { throw std::invalid_argument("bit index out of range"); }
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= n_) { throw std::invalid_argument("bit index out of range"); }
    if (value) {
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    } else {
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
}

void BitVec::flip(std::size_t i) {
    if (i >= n_) { throw std::invalid_argument("bit index out of range"); }
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::size_t BitVec::weight() const noexcept {
    std::size_t w = 0;
    for (const auto word : words_) { w += static_cast<std::size_t>(std::popcount(word)); }
    return w;
}

BitVec& BitVec::operator^=(const BitVec& rhs) {
    if (n_ != rhs.n_) { throw std::invalid_argument("vector length mismatch"); }
    for (std::size_t i = 0; i < words_.size(); ++i) { words_[i] ^= rhs.words_[i]; }
    return *this;
}

std::uint64_t BitVec::as_key() const {
    if (n_ > 64) { throw std::invalid_argument("vector too wide for a single word key"); }
    return words_.empty() ? 0 : words_[0];
}

bool dot(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) { throw std::invalid_argument("vector length mismatch"); }
    std::uint64_t acc = 0;
    const auto& aw = a.words_;
    const auto& bw = b.words_;
    for (std::size_t i = 0; i < aw.size(); ++i) { acc ^= aw[i] & bw[i]; }
    return (std::popcount(acc) & 1) != 0;
}

} // namespace qsc
