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

#include "qsc/field.hpp"

#include <stdexcept>
#include <utility>

#include "qsc/arith.hpp"

namespace qsc {

namespace {

    void require_same_field(const FieldElem& a, const FieldElem& b) {
        if (a.ctx()->modulus() != b.ctx()->modulus()) {
            throw std::invalid_argument("mismatched field contexts");
        }
    }

    // x^(2^k) mod f by k squarings of x
    Poly frobenius_power(const Poly& f, std::uint64_t k) {
        Poly r = divrem(Poly::x(), f).rem;
        for (std::uint64_t i = 0; i < k; ++i) { r = divrem(r * r, f).rem; }
        return r;
    }

    std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
        std::vector<std::uint64_t> out;
        for (std::uint64_t q = 2; q * q <= n; ++q) {
            if (n % q == 0) {
                out.push_back(q);
                while (n % q == 0) { n /= q; }
            }
        }
        if (n > 1) { out.push_back(n); }
        return out;
    }

} // namespace

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    require_same_field(*this, rhs);
    return FieldElem(rep_ + rhs.rep_, ctx_);
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    require_same_field(*this, rhs);
    return FieldElem(divrem(rep_ * rhs.rep_, ctx_->modulus()).rem, ctx_);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem r = ctx_->one();
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1U) { r = r * base; }
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool operator==(const FieldElem& lhs, const FieldElem& rhs) {
    require_same_field(lhs, rhs);
    return lhs.rep_ == rhs.rep_;
}

FieldElem FieldCtx::element(const Poly& rep) const {
    return FieldElem(divrem(rep, modulus_).rem, shared_from_this());
}

FieldElem FieldCtx::zero() const { return FieldElem(Poly::zero(), shared_from_this()); }
FieldElem FieldCtx::one() const { return FieldElem(Poly::one(), shared_from_this()); }
FieldElem FieldCtx::gen() const { return element(Poly::x()); }

bool is_irreducible(const Poly& f) {
    const auto df = f.degree();
    if (!df || *df < 1) { throw std::invalid_argument("degree >= 1 required"); }
    const std::uint64_t t = *df;
    const Poly x_mod_f = divrem(Poly::x(), f).rem;
    if (frobenius_power(f, t) != x_mod_f) { return false; }
    for (const auto q : prime_factors(t)) {
        const Poly s = frobenius_power(f, t / q) + x_mod_f;
        if (s.is_zero() || !gcd(s, f).is_one()) { return false; }
    }
    return true;
}

FieldCtxPtr build_field(std::uint64_t p) {
    const std::uint64_t t = mult_order_of_two(p); // validates p
    if (t > 63) { throw std::invalid_argument("splitting field exceeds single-word degree"); }
    // ascending little-endian value scan; f(0) = 1 is necessary, so odd only
    const std::uint64_t lo = std::uint64_t{1} << t;
    for (std::uint64_t v = lo + 1; v < 2 * lo; v += 2) {
        Poly f = Poly::from_words({v});
        if (is_irreducible(f)) {
            return FieldCtxPtr(new FieldCtx(p, t, std::move(f)));
        }
    }
    throw std::logic_error("no irreducible modulus found"); // impossible
}

FieldElem primitive_root_of_unity(const FieldCtxPtr& ctx) {
    if (!ctx) { throw std::invalid_argument("null field context"); }
    const std::uint64_t group = (std::uint64_t{1} << ctx->t()) - 1;
    const std::uint64_t exp = group / ctx->p(); // p | 2^t - 1 by choice of t
    // any beta with beta^exp != 1 yields an element of order exactly p
    FieldElem root = ctx->one();
    for (std::uint64_t v = 2;; ++v) {
        const FieldElem beta = ctx->element(Poly::from_words({v}));
        root = beta.pow(exp);
        if (!root.is_one()) { break; }
    }
    // order-p elements are exactly the nontrivial powers of any one of them;
    // pick the canonical (smallest-valued) representative
    FieldElem best = root;
    FieldElem cur = root;
    for (std::uint64_t j = 2; j < ctx->p(); ++j) {
        cur = cur * root;
        if (cur.rep() < best.rep()) { best = cur; }
    }
    return best;
}

Poly gf2_product_over_roots(const FieldElem& alpha, std::span<const std::uint64_t> exps) {
    const auto& ctx = alpha.ctx();
    // product of (x - alpha^i) with coefficients in the big field
    std::vector<FieldElem> coeffs{ctx->one()}; // coeffs[j] multiplies x^j
    for (const auto i : exps) {
        const FieldElem root = alpha.pow(i);
        std::vector<FieldElem> next(coeffs.size() + 1, ctx->zero());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] = next[j + 1] + coeffs[j];
            next[j] = next[j] + coeffs[j] * root;
        }
        coeffs = std::move(next);
    }
    Poly out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_one()) {
            out.set_coeff(j, true);
        } else if (!coeffs[j].is_zero()) {
            throw std::invalid_argument("product has coefficients outside GF(2)");
        }
    }
    return out;
}

Poly minimal_polynomial(const FieldElem& alpha, std::uint64_t s) {
    const auto& ctx = alpha.ctx();
    if (s >= ctx->p()) { throw std::invalid_argument("exponent out of range"); }
    const auto coset = cyclotomic_coset(s, ctx->p());
    Poly m = gf2_product_over_roots(alpha, coset);
    if (!m.degree() || *m.degree() != coset.size()) {
        throw std::logic_error("minimal polynomial degree mismatch");
    }
    return m;
}

FieldElem eval(const Poly& p, const FieldElem& beta) {
    const auto& ctx = beta.ctx();
    FieldElem acc = ctx->zero();
    if (p.is_zero()) { return acc; }
    for (std::size_t i = *p.degree() + 1; i-- > 0;) {
        acc = acc * beta;
        if (p.coeff(i)) { acc = acc + ctx->one(); }
    }
    return acc;
}

} // namespace qsc
