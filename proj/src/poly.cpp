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

#include "qsc/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace qsc {

namespace {

    constexpr std::size_t word_bits = 64;

    // acc ^= src << shift, acc already sized to hold the result
    void xor_shifted(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& src,
                     std::size_t shift) {
        const std::size_t word_off = shift / word_bits;
        const unsigned bit_off = static_cast<unsigned>(shift % word_bits);
        for (std::size_t i = 0; i < src.size(); ++i) {
            acc[word_off + i] ^= src[i] << bit_off;
            if (bit_off != 0 && word_off + i + 1 < acc.size()) {
                acc[word_off + i + 1] ^= src[i] >> (word_bits - bit_off);
            }
        }
    }

} // namespace

void Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) { words_.pop_back(); }
}

Poly Poly::monomial(std::size_t e) {
    Poly p;
    p.set_coeff(e, true);
    return p;
}

Poly Poly::from_exponents(std::initializer_list<std::size_t> exps) {
    Poly p;
    for (const auto e : exps) {
        if (p.coeff(e)) { throw std::invalid_argument("duplicate exponent"); }
        p.set_coeff(e, true);
    }
    return p;
}

Poly Poly::x_n_minus_1(std::size_t n) {
    if (n == 0) { throw std::invalid_argument("length must be positive"); }
    Poly p = monomial(n);
    p.set_coeff(0, true);
    return p;
}

Poly Poly::from_words(std::vector<std::uint64_t> words) {
    Poly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (words_.empty()) { return std::nullopt; }
    const std::size_t top = words_.size() - 1;
    return top * word_bits + (word_bits - 1 - static_cast<std::size_t>(std::countl_zero(words_[top])));
}

bool Poly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / word_bits;
    if (w >= words_.size()) { return false; }
    return (words_[w] >> (i % word_bits)) & 1U;
}

std::size_t Poly::weight() const noexcept {
    std::size_t w = 0;
    for (const auto word : words_) { w += static_cast<std::size_t>(std::popcount(word)); }
    return w;
}

void Poly::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / word_bits;
    if (value) {
        if (w >= words_.size()) { words_.resize(w + 1, 0); }
        words_[w] |= std::uint64_t{1} << (i % word_bits);
    } else {
        if (w < words_.size()) {
            words_[w] &= ~(std::uint64_t{1} << (i % word_bits));
            trim();
        }
    }
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.words_.size() > words_.size()) { words_.resize(rhs.words_.size(), 0); }
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) { words_[i] ^= rhs.words_[i]; }
    trim();
    return *this;
}

Poly& Poly::operator<<=(std::size_t k) {
    if (is_zero() || k == 0) { return *this; }
    const std::size_t new_deg = *degree() + k;
    std::vector<std::uint64_t> out(new_deg / word_bits + 1, 0);
    xor_shifted(out, words_, k);
    words_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator>>=(std::size_t k) {
    if (is_zero() || k == 0) { return *this; }
    if (*degree() < k) {
        words_.clear();
        return *this;
    }
    const std::size_t word_off = k / word_bits;
    const unsigned bit_off = static_cast<unsigned>(k % word_bits);
    std::vector<std::uint64_t> out(words_.size() - word_off, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = words_[word_off + i] >> bit_off;
        if (bit_off != 0 && word_off + i + 1 < words_.size()) {
            out[i] |= words_[word_off + i + 1] << (word_bits - bit_off);
        }
    }
    words_ = std::move(out);
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) { return Poly{}; }
    // carry-less product: xor lhs shifted to every set bit of rhs
    Poly out;
    out.words_.assign(lhs.words_.size() + rhs.words_.size(), 0);
    for (std::size_t wi = 0; wi < rhs.words_.size(); ++wi) {
        std::uint64_t w = rhs.words_[wi];
        while (w != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(w));
            w &= w - 1;
            xor_shifted(out.words_, lhs.words_, wi * 64 + bit);
        }
    }
    out.trim();
    return out;
}

std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept {
    if (lhs.words_.size() != rhs.words_.size()) {
        return lhs.words_.size() <=> rhs.words_.size();
    }
    for (std::size_t i = lhs.words_.size(); i-- > 0;) {
        if (lhs.words_[i] != rhs.words_[i]) { return lhs.words_[i] <=> rhs.words_[i]; }
    }
    return std::strong_ordering::equal;
}

std::string Poly::to_text() const {
    if (is_zero()) { return "0"; }
    std::string out;
    for (std::size_t i = *degree() + 1; i-- > 0;) {
        if (!coeff(i)) { continue; }
        if (!out.empty()) { out += '+'; }
        if (i == 0) {
            out += '1';
        } else if (i == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

std::string Poly::to_hex() const {
    if (is_zero()) { return "0x0"; }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (std::size_t nib = 16; nib-- > 0;) {
            const auto d = static_cast<unsigned>((words_[i] >> (4 * nib)) & 0xF);
            if (out.empty() && d == 0) { continue; }
            out += digits[d];
        }
    }
    return "0x" + out;
}

Poly Poly::parse_text(std::string_view s) {
    Poly p;
    std::size_t pos = 0;
    bool saw_term = false;
    const auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])) != 0) { ++pos; }
    };
    skip_ws();
    while (pos < s.size()) {
        if (saw_term) {
            if (s[pos] != '+') { throw std::invalid_argument("expected '+' between terms"); }
            ++pos;
            skip_ws();
        }
        std::size_t e = 0;
        if (s[pos] == 'x') {
            ++pos;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const auto begin = s.data() + pos;
                const auto end = s.data() + s.size();
                std::size_t val = 0;
                const auto res = std::from_chars(begin, end, val);
                if (res.ec != std::errc{} || res.ptr == begin) {
                    throw std::invalid_argument("malformed exponent");
                }
                pos += static_cast<std::size_t>(res.ptr - begin);
                e = val;
            } else {
                e = 1;
            }
        } else if (s[pos] == '1') {
            ++pos;
            e = 0;
        } else if (s[pos] == '0' && !saw_term) {
            ++pos;
            skip_ws();
            if (pos != s.size()) { throw std::invalid_argument("malformed polynomial"); }
            return p;
        } else {
            throw std::invalid_argument("malformed term");
        }
        if (p.coeff(e)) { throw std::invalid_argument("duplicate term"); }
        p.set_coeff(e, true);
        saw_term = true;
        skip_ws();
    }
    if (!saw_term) { throw std::invalid_argument("empty polynomial"); }
    return p;
}

Poly Poly::parse_hex(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) { s.remove_prefix(2); }
    if (s.empty()) { throw std::invalid_argument("empty hex string"); }
    std::vector<std::uint64_t> words((s.size() + 15) / 16, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[s.size() - 1 - i];
        unsigned d = 0;
        if (c >= '0' && c <= '9') {
            d = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            d = static_cast<unsigned>(c - 'a') + 10;
        } else if (c >= 'A' && c <= 'F') {
            d = static_cast<unsigned>(c - 'A') + 10;
        } else {
            throw std::invalid_argument("malformed hex digit");
        }
        words[i / 16] |= std::uint64_t{d} << (4 * (i % 16));
    }
    return from_words(std::move(words));
}

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) { throw std::invalid_argument("polynomial division by zero"); }
    const std::size_t db = *b.degree();
    DivRem out;
    out.rem = a;
    while (!out.rem.is_zero() && *out.rem.degree() >= db) {
        const std::size_t shift = *out.rem.degree() - db;
        out.rem += b << shift;
        out.quot.set_coeff(shift, true);
    }
    return out;
}

Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) { throw std::invalid_argument("gcd(0, 0) is undefined"); }
    while (!b.is_zero()) {
        Poly r = divrem(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly mod_pow_x(std::uint64_t e, const Poly& f) {
    const auto df = f.degree();
    if (!df || *df < 1) { throw std::invalid_argument("modulus must have degree >= 1"); }
    Poly r = Poly::one();
    for (std::size_t bit = 64; bit-- > 0;) {
        r = divrem(r * r, f).rem;
        if ((e >> bit) & 1U) { r = divrem(r << 1, f).rem; }
    }
    return r;
}

std::uint64_t order(const Poly& f, std::uint64_t cap) {
    const auto df = f.degree();
    if (!df || *df < 1 || !f.coeff(0)) { throw std::invalid_argument("order undefined"); }
    if (cap == 0) { throw std::invalid_argument("order exceeds cap"); }
    if (mod_pow_x(cap, f).is_one()) {
        // order divides cap: test divisors in increasing order
        std::vector<std::uint64_t> divs;
        for (std::uint64_t d = 1; d * d <= cap; ++d) {
            if (cap % d == 0) {
                divs.push_back(d);
                divs.push_back(cap / d);
            }
        }
        std::sort(divs.begin(), divs.end());
        for (const auto d : divs) {
            if (mod_pow_x(d, f).is_one()) { return d; }
        }
    }
    Poly r = divrem(Poly::x(), f).rem;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        if (r.is_one()) { return e; }
        r = divrem(r << 1, f).rem;
    }
    throw std::invalid_argument("order exceeds cap");
}

Poly reciprocal(const Poly& p) {
    if (p.is_zero()) { return p; }
    const std::size_t d = *p.degree();
    Poly out;
    for (std::size_t i = 0; i <= d; ++i) {
        if (p.coeff(i)) { out.set_coeff(d - i, true); }
    }
    return out;
}

std::size_t PolyHash::operator()(const Poly& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto w : p.words()) {
        h ^= w;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 32));
}

} // namespace qsc
