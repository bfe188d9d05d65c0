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

#ifndef QSC_QR_HPP
#define QSC_QR_HPP

#include <cstdint>

#include "qsc/cyclic.hpp"
#include "qsc/field.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/*
   Quadratic residue codes of prime length p, with 2 a residue mod p
   (p = 8m +/- 1). Over the canonical splitting field with canonical root
   alpha, the residue generator is prod_{i in Q}(x - alpha^i) for Q the
   nonzero squares mod p, the nonresidue generator the complementary product.
   Which of the two equivalent codes lands on which label depends on the
   choice of alpha; accessors that care about a specific printed generator
   should go through paper_canonical().

   The augmented ("bar") codes multiply a generator by (x - 1), cutting the
   dimension by one. For p = 8m - 1 each bar code is the dual of the plain
   code on the same exponent set, making both plain codes dual-containing.
*/

class QrFamily {
  public:
    [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
    [[nodiscard]] const FieldCtxPtr& field() const noexcept { return field_; }
    [[nodiscard]] const FieldElem& alpha() const noexcept { return alpha_; }

    [[nodiscard]] const CyclicCode& residue_code() const noexcept { return c_r_; }
    [[nodiscard]] const CyclicCode& nonresidue_code() const noexcept { return c_nr_; }
    [[nodiscard]] const CyclicCode& residue_bar() const noexcept { return c_r_bar_; }
    [[nodiscard]] const CyclicCode& nonresidue_bar() const noexcept { return c_nr_bar_; }

    // the family member {residue, nonresidue} whose generator equals the
    // expected polynomial; absorbs the root-labeling freedom
    [[nodiscard]] const CyclicCode& paper_canonical(const Poly& expected_generator) const;

  private:
    friend QrFamily build_qr_family(std::uint64_t p);
    QrFamily(std::uint64_t p, FieldCtxPtr field, FieldElem alpha, CyclicCode c_r,
             CyclicCode c_nr, CyclicCode c_r_bar, CyclicCode c_nr_bar)
        : p_(p), field_(std::move(field)), alpha_(std::move(alpha)), c_r_(std::move(c_r)),
          c_nr_(std::move(c_nr)), c_r_bar_(std::move(c_r_bar)), c_nr_bar_(std::move(c_nr_bar)) {}

    std::uint64_t p_;
    FieldCtxPtr field_;
    FieldElem alpha_;
    CyclicCode c_r_;
    CyclicCode c_nr_;
    CyclicCode c_r_bar_;
    CyclicCode c_nr_bar_;
};

// p prime with p = +/-1 mod 8
QrFamily build_qr_family(std::uint64_t p);

struct Lemma2Report {
    bool residue_dual_is_bar = false;
    bool nonresidue_dual_is_bar = false;
    bool residue_dual_containing = false;
    bool nonresidue_dual_containing = false;

    [[nodiscard]] bool all_hold() const noexcept {
        return residue_dual_is_bar && nonresidue_dual_is_bar && residue_dual_containing &&
               nonresidue_dual_containing;
    }
};

// duality structure specific to p = 8m - 1; other p are rejected
Lemma2Report verify_lemma2(const QrFamily& family);

// guaranteed minimum-distance floor for length-p quadratic residue codes:
// d^2 >= p, sharpened to d^2 - d + 1 >= p when p = 3 mod 4
std::uint64_t square_root_bound(std::uint64_t p);

} // namespace qsc

#endif // QSC_QR_HPP
