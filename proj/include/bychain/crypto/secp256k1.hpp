// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef BYCHAIN_CRYPTO_SECP256K1_HPP
#define BYCHAIN_CRYPTO_SECP256K1_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "bychain/crypto/sha256.hpp"

namespace bychain::crypto {

// ECDSA over secp256k1. Self-contained variable-time implementation for
// the simulator: signatures use RFC 6979 deterministic nonces and low-s
// normalization, so every run of the protocol is bit-reproducible.
// Not hardened against timing side channels; do not reuse for real wallets.

inline constexpr size_t kPrivateKeySize = 32;
inline constexpr size_t kPublicKeySize = 33;  // compressed point
inline constexpr size_t kSignatureSize = 64;  // r || s, 32 bytes each

using PrivateKeyBytes = std::array<uint8_t, kPrivateKeySize>;
using PublicKeyBytes = std::array<uint8_t, kPublicKeySize>;
using SignatureBytes = std::array<uint8_t, kSignatureSize>;

// True iff the 32 bytes are a valid secret scalar (nonzero, below the
// group order).
bool is_valid_private_key(const PrivateKeyBytes& sk);

// Compressed public key for a secret scalar. Throws std::invalid_argument
// on an invalid scalar (signals a corrupted escrow).
PublicKeyBytes derive_public_key(const PrivateKeyBytes& sk);

// Deterministic ECDSA signature over a 32-byte message digest.
SignatureBytes sign_digest(const PrivateKeyBytes& sk, const Hash256& digest);

// Strict verification: false on any malformed input (bad point encoding,
// out-of-range scalars), never throws.
bool verify_digest(const PublicKeyBytes& pk, const Hash256& digest,
                   const SignatureBytes& sig);

// Maps arbitrary seed bytes onto a valid secret scalar by hashing with a
// rejection counter; total for any input.
PrivateKeyBytes private_key_from_seed(std::span<const uint8_t> seed);

} // namespace bychain::crypto

#endif // BYCHAIN_CRYPTO_SECP256K1_HPP
