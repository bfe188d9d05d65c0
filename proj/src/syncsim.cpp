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

#include "qsc/syncsim.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qsc/random.hpp"

namespace qsc {

Frame frame_from_label(const Poly& label, std::uint64_t n, std::uint64_t c_l, std::uint64_t c_r) {
    if (n == 0 || c_l > n || c_r > n) { throw std::invalid_argument("margins exceed length"); }
    const BitVec w = BitVec::from_poly(label, n);
    Frame frame{.n = n, .c_l = c_l, .c_r = c_r, .label = label, .bits = BitVec(n + c_l + c_r)};
    for (std::uint64_t i = 0; i < n + c_l + c_r; ++i) {
        frame.bits.set(i, w.get((i + n - c_l) % n));
    }
    return frame;
}

Frame encode_frame(const CyclicCode& c1, const CyclicCode& c2, const Poly& w2, std::uint64_t c_l,
                   std::uint64_t c_r) {
    const Poly f = quotient_f(c1, c2); // validates the strict pair and lengths
    if (!c2.contains_word(w2)) { throw std::invalid_argument("word is not in the inner code"); }
    const std::uint64_t ord_f = order(f, c1.length());
    if (c_l + c_r >= ord_f) {
        throw std::invalid_argument("misalignment tolerance exceeds quotient order");
    }
    return frame_from_label(w2 + c1.generator(), c1.length(), c_l, c_r);
}

BitVec transmit(const Frame& frame, const Channel& channel) {
    if (channel.theta < -static_cast<std::int64_t>(frame.c_l) ||
        channel.theta > static_cast<std::int64_t>(frame.c_r)) {
        throw std::invalid_argument("misalignment outside the frame margins");
    }
    if (channel.errors.size() != frame.bits.size()) {
        throw std::invalid_argument("error vector length mismatch");
    }
    BitVec window(frame.n);
    const std::int64_t base = static_cast<std::int64_t>(frame.c_l) + channel.theta;
    for (std::uint64_t j = 0; j < frame.n; ++j) {
        const auto idx = static_cast<std::uint64_t>(base + static_cast<std::int64_t>(j));
        window.set(j, frame.bits.get(idx) ^ channel.errors.get(idx));
    }
    return window;
}

SyncDecoder::SyncDecoder(CyclicCode c1, Poly f, std::uint64_t c_l, std::uint64_t c_r,
                         std::optional<std::uint64_t> d1)
    : c1_(std::move(c1)), f_(std::move(f)), c_l_(c_l), c_r_(c_r) {
    const std::uint64_t n = c1_.length();
    if (!divrem(Poly::x_n_minus_1(n), f_).rem.is_zero()) {
        throw std::invalid_argument("quotient must divide x^n - 1");
    }
    const std::uint64_t ord_f = order(f_, n);
    if (c_l_ + c_r_ >= ord_f) {
        throw std::invalid_argument("misalignment tolerance exceeds quotient order");
    }

    t1_ = (d1 && *d1 >= 1) ? (*d1 - 1) / 2 : 0;
    if (c1_.dim() < n && t1_ > 0) {
        if (n - c1_.dim() > 64) {
            throw std::invalid_argument("syndrome exceeds single-word keys");
        }
        parity_.emplace(c1_);
        // every correctable pattern, weight 0 .. t1, keyed by its syndrome
        decode_table_.emplace(0, BitVec(n));
        std::vector<std::uint64_t> positions;
        const auto emit = [&] {
            BitVec pattern(n);
            for (const auto pos : positions) { pattern.set(pos, true); }
            const std::uint64_t key = parity_->syndrome(pattern).as_key();
            if (!decode_table_.emplace(key, pattern).second) {
                throw std::logic_error("syndrome table collision below half distance");
            }
        };
        const auto rec = [&](auto&& self, std::uint64_t start, std::uint64_t left) -> void {
            if (left == 0) {
                emit();
                return;
            }
            for (std::uint64_t pos = start; pos + left <= n; ++pos) {
                positions.push_back(pos);
                self(self, pos + 1, left - 1);
                positions.pop_back();
            }
        };
        for (std::uint64_t w = 1; w <= t1_; ++w) { rec(rec, 0, w); }
    } else if (c1_.dim() == n) {
        t1_ = 0; // full space: nothing is correctable and nothing needs to be
    }

    // reading theta positions off multiplies the label by x^(-theta); the
    // residue seen at the decoder is x^((n - theta) mod n) mod f
    for (std::int64_t theta = -static_cast<std::int64_t>(c_l_);
         theta <= static_cast<std::int64_t>(c_r_); ++theta) {
        const std::uint64_t shift =
            static_cast<std::uint64_t>((static_cast<std::int64_t>(n) - theta)) %
            n;
        const Poly key = mod_pow_x(shift, f_);
        if (!shift_table_.emplace(key, theta).second) {
            throw std::logic_error("misalignment residues collide below the quotient order");
        }
    }
}

RecoveryResult SyncDecoder::recover(const BitVec& window) const {
    if (window.size() != c1_.length()) { throw std::invalid_argument("window length mismatch"); }
    RecoveryResult result;
    result.corrected_window = window;
    if (parity_) {
        const std::uint64_t key = parity_->syndrome(window).as_key();
        if (key != 0) {
            const auto it = decode_table_.find(key);
            if (it == decode_table_.end()) {
                result.reason = "uncorrectable bit errors";
                return result;
            }
            result.corrected_window ^= it->second;
            result.corrected_errors = it->second.weight();
        }
    }
    const auto [quot, rem] = divrem(result.corrected_window.to_poly(), c1_.generator());
    if (!rem.is_zero()) {
        if (!parity_) { // no correction stage: noise can leave the code entirely
            result.reason = "uncorrectable bit errors";
            return result;
        }
        throw std::logic_error("syndrome-corrected window left the outer code");
    }
    const Poly residue = divrem(quot, f_).rem;
    const auto it = shift_table_.find(residue);
    if (it == shift_table_.end()) {
        result.reason = "misalignment outside the design range";
        return result;
    }
    result.theta_hat = it->second;
    result.success = true;
    return result;
}

RecoveryResult recover(const BitVec& window, const CyclicCode& c1, const Poly& f,
                       std::uint64_t c_l, std::uint64_t c_r) {
    std::optional<std::uint64_t> d1;
    if (c1.dim() < c1.length()) { d1 = try_min_distance(c1); }
    const SyncDecoder decoder(c1, f, c_l, c_r, d1);
    return decoder.recover(window);
}

TrialSummary run_trials(const QsyncParams& params, std::uint64_t trials, std::uint64_t max_errors,
                        std::uint64_t seed) {
    const std::uint64_t n = params.n;
    if (max_errors > n) { throw std::invalid_argument("error weight exceeds window length"); }
    const SyncDecoder decoder(params.c1, params.f, params.c_l, params.c_r, params.d1);
    TrialSummary summary{.trials = trials,
                         .successes = 0,
                         .max_errors = max_errors,
                         .seed = seed,
                         .failures = {}};
    const BitVec no_errors(n + params.c_l + params.c_r);
    for (std::uint64_t i = 0; i < trials; ++i) {
        SplitMix64 rng(mix_seed(seed, i));

        // inner codeword straight from the message space
        std::vector<std::uint64_t> msg_words((params.k2 + 63) / 64, 0);
        for (auto& word : msg_words) { word = rng.next(); }
        if (params.k2 % 64 != 0) {
            msg_words.back() &= (std::uint64_t{1} << (params.k2 % 64)) - 1;
        }
        const Poly w2 = encode(params.c2, Poly::from_words(std::move(msg_words)));
        const Frame frame = frame_from_label(w2 + params.c1.generator(), n, params.c_l, params.c_r);

        const std::int64_t theta = -static_cast<std::int64_t>(params.c_l) +
                                   static_cast<std::int64_t>(rng.bounded(params.c_l + params.c_r + 1));
        const std::uint64_t weight = rng.bounded(max_errors + 1);
        std::vector<std::uint64_t> positions;
        while (positions.size() < weight) {
            const std::uint64_t pos = rng.bounded(n);
            if (std::find(positions.begin(), positions.end(), pos) == positions.end()) {
                positions.push_back(pos);
            }
        }
        std::sort(positions.begin(), positions.end());

        Channel channel{.theta = theta, .errors = BitVec(n + params.c_l + params.c_r)};
        const std::int64_t base = static_cast<std::int64_t>(params.c_l) + theta;
        for (const auto pos : positions) {
            channel.errors.set(static_cast<std::uint64_t>(base + static_cast<std::int64_t>(pos)),
                               true);
        }

        const BitVec window = transmit(frame, channel);
        const BitVec truth = transmit(frame, Channel{.theta = theta, .errors = no_errors});
        const RecoveryResult result = decoder.recover(window);

        const bool ok = result.success && result.theta_hat == theta &&
                        result.corrected_window == truth;
        if (ok) {
            ++summary.successes;
        } else {
            summary.failures.push_back(
                TrialFailure{.trial_index = i,
                             .theta = theta,
                             .error_positions = positions,
                             .reason = result.success ? "miscorrected beyond design weight"
                                                      : result.reason});
        }
    }
    return summary;
}

} // namespace qsc
