// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "bychain/util/rng.hpp"

namespace bychain {

static uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng Rng::fork(std::string_view label) const {
    // FNV-1a over the label, mixed with the parent seed
    uint64_t h = 0xCBF29CE484222325ull;
    for (char c : label) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001B3ull;
    }
    return Rng(splitmix64(seed_ ^ splitmix64(h)));
}

} // namespace bychain
