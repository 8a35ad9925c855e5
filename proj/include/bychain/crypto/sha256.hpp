// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_CRYPTO_SHA256_HPP
#define BYCHAIN_CRYPTO_SHA256_HPP

#include <array>
#include <cstdint>
#include <span>

#include "bychain/util/bytes.hpp"

namespace bychain::crypto {

using Hash256 = std::array<uint8_t, 32>;

class Sha256 {
public:
    Sha256();
    Sha256& write(std::span<const uint8_t> data);
    Hash256 finalize();
    void reset();

private:
    void transform(const uint8_t* block);

    uint32_t state_[8];
    uint8_t buf_[64];
    uint64_t total_ = 0;
    size_t buf_len_ = 0;
};

Hash256 sha256(std::span<const uint8_t> data);
Hash256 sha256(const Bytes& data);

// HMAC-SHA256 (RFC 2104); key of any length.
Hash256 hmac_sha256(std::span<const uint8_t> key, std::span<const uint8_t> data);

} // namespace bychain::crypto

#endif // BYCHAIN_CRYPTO_SHA256_HPP
