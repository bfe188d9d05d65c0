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

#ifndef QSC_RANDOM_HPP
#define QSC_RANDOM_HPP

#include <cstdint>
#include <stdexcept>

namespace qsc {

// splitmix64: deterministic across platforms and toolchains, which the
// simulation outputs rely on. Sampling helpers avoid <random> distributions
// for the same reason.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform draw from [0, n) by rejection, bias-free
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) { throw std::invalid_argument("empty sampling range"); }
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) { return r % n; }
        }
    }

  private:
    std::uint64_t state_;
};

// stateless hash of (master seed, trial index) -> per-trial seed, so trial i
// is reproducible in isolation and trials are order-independent
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
    SplitMix64 rng(master ^ (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
    return rng.next();
}

} // namespace qsc

#endif // QSC_RANDOM_HPP
