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

#ifndef QSC_FIELD_HPP
#define QSC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qsc/poly.hpp"

namespace qsc {

/*
   The splitting field GF(2^t) of x^p - 1 over GF(2), where t is the
   multiplicative order of 2 mod p. Elements are residues mod a canonical
   irreducible modulus: the degree-t irreducible whose coefficient string is
   smallest as a little-endian integer. Same p therefore always means the same
   field and the same element labels, everywhere.
*/

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FieldElem {
  public:
    [[nodiscard]] const Poly& rep() const noexcept { return rep_; }
    [[nodiscard]] const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    [[nodiscard]] bool is_zero() const noexcept { return rep_.is_zero(); }
    [[nodiscard]] bool is_one() const noexcept { return rep_.is_one(); }

    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    [[nodiscard]] FieldElem pow(std::uint64_t e) const;

    friend bool operator==(const FieldElem& lhs, const FieldElem& rhs);

  private:
    friend class FieldCtx;
    FieldElem(Poly rep, FieldCtxPtr ctx) : rep_(std::move(rep)), ctx_(std::move(ctx)) {}

    Poly rep_;
    FieldCtxPtr ctx_;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  public:
    [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t t() const noexcept { return t_; }
    [[nodiscard]] const Poly& modulus() const noexcept { return modulus_; }

    [[nodiscard]] FieldElem element(const Poly& rep) const; // reduces mod the modulus
    [[nodiscard]] FieldElem zero() const;
    [[nodiscard]] FieldElem one() const;
    [[nodiscard]] FieldElem gen() const; // the residue class of x

  private:
    friend FieldCtxPtr build_field(std::uint64_t p);
    FieldCtx(std::uint64_t p, std::uint64_t t, Poly modulus)
        : p_(p), t_(t), modulus_(std::move(modulus)) {}

    std::uint64_t p_;
    std::uint64_t t_;
    Poly modulus_;
};

/* free functions wrt. fields */

// odd prime p; t = ord_p(2) must fit a single word (t <= 63)
FieldCtxPtr build_field(std::uint64_t p);

// deterministic: Frobenius fixed-point test plus coprimality at maximal
// proper subfield levels
bool is_irreducible(const Poly& f);

// canonical primitive p-th root of unity: among all order-p elements, the one
// with the smallest representative value
FieldElem primitive_root_of_unity(const FieldCtxPtr& ctx);

// prod_{i in exps} (x - alpha^i), coefficients verified to land in GF(2)
Poly gf2_product_over_roots(const FieldElem& alpha, std::span<const std::uint64_t> exps);

// minimal polynomial of alpha^s over GF(2): the coset product M_s; 0 <= s < p
Poly minimal_polynomial(const FieldElem& alpha, std::uint64_t s);

// p(beta) by Horner's rule
FieldElem eval(const Poly& p, const FieldElem& beta);

} // namespace qsc

#endif // QSC_FIELD_HPP
