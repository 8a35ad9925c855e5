// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_UTIL_RNG_HPP
#define BYCHAIN_UTIL_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace bychain {

// Seeded RNG for the simulator. All draws go through explicit arithmetic
// on raw engine output rather than std distributions: distribution
// implementations differ between standard libraries, the engine does not.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed), seed_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // uniform in [0, n); n > 0
    uint64_t below(uint64_t n) {
        // rejection sampling to avoid modulo bias
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    void fill(std::span<uint8_t> out) {
        size_t i = 0;
        while (i < out.size()) {
            uint64_t v = engine_();
            for (int b = 7; b >= 0 && i < out.size(); --b)
                out[i++] = static_cast<uint8_t>(v >> (8 * b));
        }
    }

    // Derives an independent child stream; same (seed, label) pair always
    // yields the same child.
    Rng fork(std::string_view label) const;

    uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    uint64_t seed_ = 0;
};

} // namespace bychain

#endif // BYCHAIN_UTIL_RNG_HPP
