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

#ifndef QSC_SYNCSIM_HPP
#define QSC_SYNCSIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qsc/bitvec.hpp"
#include "qsc/chain.hpp"
#include "qsc/cyclic.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/*
   Classical model of the block-misalignment channel. A frame of length
   n + c_l + c_r wraps the label word w (a codeword of the outer code c1,
   built as w2 + g1 from a codeword w2 of the inner code):

       frame = (last c_l bits of w) | w | (first c_r bits of w)

   The receiver reads a window of n bits starting at offset theta in
   [-c_l, c_r] relative to the true boundary, with additive bit errors. The
   decoder corrects up to t1 = (d1-1)/2 errors against c1, then recovers
   theta from the residue of the corrected word's quotient by g1 mod
   f = g2/g1: reading the frame theta positions off multiplies the label by
   x^(-theta) mod (x^n - 1), so the residues x^((n - theta) mod n) mod f are
   pairwise distinct keys as long as c_l + c_r < ord(f).
*/

struct Frame {
    std::uint64_t n = 0;
    std::uint64_t c_l = 0;
    std::uint64_t c_r = 0;
    Poly label;  // the codeword w of c1 the frame carries
    BitVec bits; // length n + c_l + c_r
};

struct Channel {
    std::int64_t theta = 0; // window offset, negative = window starts early
    BitVec errors;          // additive noise on the frame, length n + c_l + c_r
};

struct RecoveryResult {
    bool success = false;
    std::int64_t theta_hat = 0;
    BitVec corrected_window;
    std::uint64_t corrected_errors = 0;
    std::string reason; // empty on success
};

// w2 must be a codeword of c2; label = w2 + g1 per the construction
Frame encode_frame(const CyclicCode& c1, const CyclicCode& c2, const Poly& w2, std::uint64_t c_l,
                   std::uint64_t c_r);

// frame assembly from a label already known to lie in c1 (no validation)
Frame frame_from_label(const Poly& label, std::uint64_t n, std::uint64_t c_l, std::uint64_t c_r);

// the n bits the receiver sees at offset channel.theta
BitVec transmit(const Frame& frame, const Channel& channel);

// precomputed tables: syndrome -> error pattern of weight <= t1, and
// residue mod f -> theta
class SyncDecoder {
  public:
    SyncDecoder(CyclicCode c1, Poly f, std::uint64_t c_l, std::uint64_t c_r,
                std::optional<std::uint64_t> d1);

    [[nodiscard]] std::uint64_t t1() const noexcept { return t1_; }
    [[nodiscard]] std::size_t syndrome_entries() const noexcept { return decode_table_.size(); }
    [[nodiscard]] std::size_t misalignment_entries() const noexcept { return shift_table_.size(); }

    [[nodiscard]] RecoveryResult recover(const BitVec& window) const;

  private:
    CyclicCode c1_;
    Poly f_;
    std::uint64_t c_l_;
    std::uint64_t c_r_;
    std::uint64_t t1_ = 0;
    std::optional<ParityCheck> parity_;
    std::unordered_map<std::uint64_t, BitVec> decode_table_;
    std::unordered_map<Poly, std::int64_t, PolyHash> shift_table_;
};

// one-shot convenience: builds the decoder, d1 from enumeration when feasible
RecoveryResult recover(const BitVec& window, const CyclicCode& c1, const Poly& f,
                       std::uint64_t c_l, std::uint64_t c_r);

struct TrialFailure {
    std::uint64_t trial_index = 0;
    std::int64_t theta = 0;
    std::vector<std::uint64_t> error_positions; // window-relative
    std::string reason;
};

struct TrialSummary {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t max_errors = 0;
    std::uint64_t seed = 0;
    std::vector<TrialFailure> failures;
};

// deterministic Monte Carlo: trial i draws from splitmix64 seeded by
// (seed, i); uniform theta in [-c_l, c_r], uniform error weight in
// [0, max_errors], distinct window positions. Success = decoder reports
// success AND theta_hat = theta AND corrected window matches the clean one.
TrialSummary run_trials(const QsyncParams& params, std::uint64_t trials,
                        std::uint64_t max_errors, std::uint64_t seed);

} // namespace qsc

#endif // QSC_SYNCSIM_HPP
