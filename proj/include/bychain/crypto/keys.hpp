// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_CRYPTO_KEYS_HPP
#define BYCHAIN_CRYPTO_KEYS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bychain/crypto/secp256k1.hpp"
#include "bychain/util/rng.hpp"

namespace bychain::crypto {

void secure_wipe(uint8_t* data, size_t len);

struct KeyPair {
    PrivateKeyBytes private_key{};
    PublicKeyBytes public_key{};
};

// 20-byte node address: first 20 bytes of SHA256(SHA256(public key)).
struct Address {
    std::array<uint8_t, 20> digest{};

    bool operator==(const Address&) const = default;
    auto operator<=>(const Address&) const = default;
};

Address derive_address(const PublicKeyBytes& pk);

KeyPair generate_keypair(Rng& rng);

// Signature over sha256(message).
SignatureBytes sign(const PrivateKeyBytes& sk, std::span<const uint8_t> message);
bool verify(const PublicKeyBytes& pk, std::span<const uint8_t> message,
            const SignatureBytes& sig);

class EscrowExhausted : public std::runtime_error {
public:
    EscrowExhausted() : std::runtime_error("key escrow exhausted") {}
};

// One-use key pool. A fresh pair is consumed per proof-of-location round
// so on-chain keys never repeat; the pool extends itself from the master
// seed when it runs dry. Single-writer: callers serialize cursor mutation.
class KeyEscrow {
public:
    // Derives master pair and an initial pool from a 32-byte seed.
    static KeyEscrow from_master_seed(const std::array<uint8_t, 32>& seed,
                                      size_t initial_pool = 128);

    // Fixed pool with no way to extend; advance() past the end throws.
    static KeyEscrow from_fixed_pool(std::vector<KeyPair> pool);

    // Next unused pair without consuming it.
    const KeyPair& peek();

    // Returns the pair at the cursor, wipes the pool slot, advances.
    KeyPair advance();

    size_t cursor() const { return cursor_; }
    size_t pool_size() const { return pool_.size(); }
    const PublicKeyBytes& master_public_key() const { return master_.public_key; }

private:
    KeyEscrow() = default;
    void ensure_available();
    KeyPair derive_pool_key(uint64_t index) const;

    KeyPair master_{};
    bool has_master_ = false;
    std::vector<KeyPair> pool_;
    size_t cursor_ = 0;
};

} // namespace bychain::crypto

#endif // BYCHAIN_CRYPTO_KEYS_HPP
