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

#ifndef QSC_POLY_HPP
#define QSC_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

// Polynomial over GF(2), coefficients bit-packed little-endian: coefficient of
// x^i is bit (i % 64) of words()[i / 64]. Invariant: no trailing zero words,
// so the zero polynomial has an empty word vector and degree() is disengaged.
class Poly {
  public:
    Poly() noexcept = default;

    static Poly zero() noexcept { return Poly{}; }
    static Poly one() { return monomial(0); }
    static Poly x() { return monomial(1); }
    static Poly monomial(std::size_t e);
    static Poly from_exponents(std::initializer_list<std::size_t> exps);
    // x^n + 1, the modulus of the length-n cyclic ring
    static Poly x_n_minus_1(std::size_t n);
    // low-level: words interpreted as the packed coefficient string
    static Poly from_words(std::vector<std::uint64_t> words);

    [[nodiscard]] bool is_zero() const noexcept { return words_.empty(); }
    [[nodiscard]] bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
    [[nodiscard]] bool coeff(std::size_t i) const noexcept;
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    void set_coeff(std::size_t i, bool value);

    // ring operations; + doubles as - in characteristic 2
    Poly& operator+=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs) { *this = *this * rhs; return *this; }
    Poly& operator<<=(std::size_t k); // multiply by x^k
    Poly& operator>>=(std::size_t k); // discard the k lowest coefficients

    friend Poly operator+(Poly lhs, const Poly& rhs) { lhs += rhs; return lhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator<<(Poly p, std::size_t k) { p <<= k; return p; }
    friend Poly operator>>(Poly p, std::size_t k) { p >>= k; return p; }

    friend bool operator==(const Poly&, const Poly&) noexcept = default;
    // total order: compare coefficient strings as little-endian integers
    friend std::strong_ordering operator<=>(const Poly& lhs, const Poly& rhs) noexcept;

    // "x^15+x^12+x^7+x^6+x^2+x+1" / "0x90c7" (little-endian bits, lowercase)
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_hex() const;
    static Poly parse_text(std::string_view s);
    static Poly parse_hex(std::string_view s);

  private:
    std::vector<std::uint64_t> words_;

    void trim() noexcept;
};

struct DivRem {
    Poly quot;
    Poly rem;
};

/* free functions wrt. Poly */

DivRem divrem(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);

// x^e mod f, square-and-multiply; requires deg(f) >= 1
Poly mod_pow_x(std::uint64_t e, const Poly& f);

// smallest e >= 1 with f | x^e - 1; requires f(0) = 1 and deg(f) >= 1,
// throws when the order exceeds cap
std::uint64_t order(const Poly& f, std::uint64_t cap);

// coefficient string reversed within [0, deg]: x^deg * p(1/x); fixes 0
Poly reciprocal(const Poly& p);

struct PolyHash {
    std::size_t operator()(const Poly& p) const noexcept;
};

} // namespace qsc

#endif // QSC_POLY_HPP
