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

#include "qsc/qr.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qsc/arith.hpp"

namespace qsc {

QrFamily build_qr_family(std::uint64_t p) {
    if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7)) {
        throw std::invalid_argument("p must be prime with 2 a quadratic residue (p = 8m +/- 1)");
    }
    FieldCtxPtr field = build_field(p);
    FieldElem alpha = primitive_root_of_unity(field);

    const auto residues = quadratic_residues(p);
    std::vector<std::uint64_t> nonresidues;
    nonresidues.reserve((p - 1) / 2);
    {
        std::size_t ri = 0;
        for (std::uint64_t v = 1; v < p; ++v) {
            if (ri < residues.size() && residues[ri] == v) {
                ++ri;
            } else {
                nonresidues.push_back(v);
            }
        }
    }

    Poly g_r = gf2_product_over_roots(alpha, residues);
    Poly g_nr = gf2_product_over_roots(alpha, nonresidues);

    const Poly x_plus_1 = Poly::from_exponents({0, 1});
    if ((x_plus_1 * g_r) * g_nr != Poly::x_n_minus_1(p)) {
        throw std::logic_error("residue/nonresidue generators do not factor x^p - 1");
    }

    CyclicCode c_r(p, g_r);
    CyclicCode c_nr(p, g_nr);
    CyclicCode c_r_bar(p, x_plus_1 * g_r);
    CyclicCode c_nr_bar(p, x_plus_1 * g_nr);
    return QrFamily(p, std::move(field), std::move(alpha), std::move(c_r), std::move(c_nr),
                    std::move(c_r_bar), std::move(c_nr_bar));
}

const CyclicCode& QrFamily::paper_canonical(const Poly& expected_generator) const {
    if (c_r_.generator() == expected_generator) { return c_r_; }
    if (c_nr_.generator() == expected_generator) { return c_nr_; }
    throw std::invalid_argument("expected generator matches neither family member");
}

Lemma2Report verify_lemma2(const QrFamily& family) {
    if (family.p() % 8 != 7) {
        throw std::invalid_argument("duality structure requires p = 8m - 1");
    }
    Lemma2Report report;
    report.residue_dual_is_bar = dual(family.residue_code()) == family.residue_bar();
    report.nonresidue_dual_is_bar = dual(family.nonresidue_code()) == family.nonresidue_bar();
    report.residue_dual_containing = is_dual_containing(family.residue_code());
    report.nonresidue_dual_containing = is_dual_containing(family.nonresidue_code());
    return report;
}

std::uint64_t square_root_bound(std::uint64_t p) {
    if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7)) {
        throw std::invalid_argument("p must be prime with 2 a quadratic residue (p = 8m +/- 1)");
    }
    std::uint64_t d = 1;
    while (d * d < p) { ++d; }
    if (p % 4 == 3) {
        while (d * d - d + 1 < p) { ++d; }
    }
    return d;
}

} // namespace qsc
