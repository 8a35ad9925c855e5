// Copyright (c) 2026 The Bychain developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "bychain/crypto/secp256k1.hpp"

#include <cstring>
#include <stdexcept>

namespace bychain::crypto {

namespace {

// 256-bit unsigned integers as 4 little-endian 64-bit limbs.
using U256 = std::array<uint64_t, 4>;
using U512 = std::array<uint64_t, 8>;
using u128 = unsigned __int128;

// p = 2^256 - 2^32 - 977
constexpr U256 P = {0xFFFFFFFEFFFFFC2Full, 0xFFFFFFFFFFFFFFFFull,
                    0xFFFFFFFFFFFFFFFFull, 0xFFFFFFFFFFFFFFFFull};
// group order n
constexpr U256 N = {0xBFD25E8CD0364141ull, 0xBAAEDCE6AF48A03Bull,
                    0xFFFFFFFFFFFFFFFEull, 0xFFFFFFFFFFFFFFFFull};
// 2^256 mod p  (single limb)
constexpr U256 P_COMP = {0x1000003D1ull, 0, 0, 0};
// 2^256 mod n  (three limbs)
constexpr U256 N_COMP = {0x402DA1732FC9BEBFull, 0x4551231950B75FC4ull, 0x1ull, 0};
// (n - 1) / 2, for low-s normalization
constexpr U256 N_HALF = {0xDFE92F46681B20A0ull, 0x5D576E7357A4501Dull,
                         0xFFFFFFFFFFFFFFFFull, 0x7FFFFFFFFFFFFFFFull};

constexpr U256 GX = {0x59F2815B16F81798ull, 0x029BFCDB2DCE28D9ull,
                     0x55A06295CE870B07ull, 0x79BE667EF9DCBBACull};
constexpr U256 GY = {0x9C47D08FFB10D4B8ull, 0xFD17B448A6855419ull,
                     0x5DA4FBFC0E1108A8ull, 0x483ADA7726A3C465ull};

inline bool is_zero(const U256& a) {
    return (a[0] | a[1] | a[2] | a[3]) == 0;
}

inline int cmp(const U256& a, const U256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

// out = a + b, returns carry
inline uint64_t add(U256& out, const U256& a, const U256& b) {
    u128 c = 0;
    for (int i = 0; i < 4; ++i) {
        c += static_cast<u128>(a[i]) + b[i];
        out[i] = static_cast<uint64_t>(c);
        c >>= 64;
    }
    return static_cast<uint64_t>(c);
}

// out = a - b, returns borrow
inline uint64_t sub(U256& out, const U256& a, const U256& b) {
    u128 borrow = 0;
    for (int i = 0; i < 4; ++i) {
        u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        out[i] = static_cast<uint64_t>(d);
        borrow = (d >> 64) & 1;
    }
    return static_cast<uint64_t>(borrow);
}

inline U512 mul_wide(const U256& a, const U256& b) {
    U512 r{};
    for (int i = 0; i < 4; ++i) {
        uint64_t carry = 0;
        for (int j = 0; j < 4; ++j) {
            u128 t = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint64_t>(t);
            carry = static_cast<uint64_t>(t >> 64);
        }
        r[i + 4] = carry;
    }
    return r;
}

// Reduces a 512-bit value modulo m, where comp = 2^256 mod m has at most
// three nonzero limbs. Folds hi*comp into the low half until the value
// fits 256 bits, then subtracts m while >= m.
U256 reduce_512(const U512& x, const U256& m, const U256& comp) {
    // working buffer, little-endian, up to 8 limbs
    uint64_t w[8];
    std::memcpy(w, x.data(), sizeof(w));
    int limbs = 8;

    while (limbs > 4) {
        int hi_limbs = limbs - 4;
        uint64_t hi[4] = {0, 0, 0, 0};
        std::memcpy(hi, w + 4, sizeof(uint64_t) * hi_limbs);
        // w = lo + hi * comp
        uint64_t acc[8] = {w[0], w[1], w[2], w[3], 0, 0, 0, 0};
        for (int i = 0; i < hi_limbs; ++i) {
            uint64_t carry = 0;
            for (int j = 0; j < 3; ++j) { // comp has at most 3 limbs
                u128 t = static_cast<u128>(hi[i]) * comp[j] + acc[i + j] + carry;
                acc[i + j] = static_cast<uint64_t>(t);
                carry = static_cast<uint64_t>(t >> 64);
            }
            int k = i + 3;
            while (carry != 0 && k < 8) {
                u128 t = static_cast<u128>(acc[k]) + carry;
                acc[k] = static_cast<uint64_t>(t);
                carry = static_cast<uint64_t>(t >> 64);
                ++k;
            }
        }
        std::memcpy(w, acc, sizeof(acc));
        limbs = 8;
        while (limbs > 4 && w[limbs - 1] == 0) --limbs;
    }

    U256 r = {w[0], w[1], w[2], w[3]};
    while (cmp(r, m) >= 0) {
        U256 t;
        sub(t, r, m);
        r = t;
    }
    return r;
}

U256 add_mod(const U256& a, const U256& b, const U256& m) {
    U256 r;
    uint64_t carry = add(r, a, b);
    if (carry || cmp(r, m) >= 0) {
        U256 t;
        sub(t, r, m);
        r = t;
    }
    return r;
}

U256 sub_mod(const U256& a, const U256& b, const U256& m) {
    U256 r;
    if (sub(r, a, b)) {
        U256 t;
        add(t, r, m);
        r = t;
    }
    return r;
}

U256 mul_mod(const U256& a, const U256& b, const U256& m, const U256& comp) {
    return reduce_512(mul_wide(a, b), m, comp);
}

U256 pow_mod(const U256& base, const U256& exp, const U256& m, const U256& comp) {
    U256 result = {1, 0, 0, 0};
    U256 b = base;
    for (int limb = 0; limb < 4; ++limb) {
        uint64_t e = exp[limb];
        for (int bit = 0; bit < 64; ++bit) {
            if (e & 1) result = mul_mod(result, b, m, comp);
            b = mul_mod(b, b, m, comp);
            e >>= 1;
        }
    }
    return result;
}

// field helpers (mod p)
inline U256 fmul(const U256& a, const U256& b) { return mul_mod(a, b, P, P_COMP); }
inline U256 fsqr(const U256& a) { return fmul(a, a); }
inline U256 fadd(const U256& a, const U256& b) { return add_mod(a, b, P); }
inline U256 fsub(const U256& a, const U256& b) { return sub_mod(a, b, P); }

U256 finv(const U256& a) {
    U256 p_minus_2 = P;
    p_minus_2[0] -= 2;
    return pow_mod(a, p_minus_2, P, P_COMP);
}

// sqrt via (p+1)/4 exponent; caller must check the result squares back.
U256 fsqrt(const U256& a) {
    // (p + 1) / 4
    constexpr U256 kExp = {0xFFFFFFFFBFFFFF0Cull, 0xFFFFFFFFFFFFFFFFull,
                           0xFFFFFFFFFFFFFFFFull, 0x3FFFFFFFFFFFFFFFull};
    return pow_mod(a, kExp, P, P_COMP);
}

// scalar helpers (mod n)
inline U256 smul(const U256& a, const U256& b) { return mul_mod(a, b, N, N_COMP); }

U256 sinv(const U256& a) {
    U256 n_minus_2 = N;
    n_minus_2[0] -= 2;
    return pow_mod(a, n_minus_2, N, N_COMP);
}

U256 from_be_bytes(std::span<const uint8_t> b32) {
    U256 r{};
    for (int i = 0; i < 32; ++i)
        r[3 - i / 8] |= static_cast<uint64_t>(b32[i]) << (8 * (7 - i % 8));
    return r;
}

void to_be_bytes(const U256& v, uint8_t* out) {
    for (int i = 0; i < 32; ++i)
        out[i] = static_cast<uint8_t>(v[3 - i / 8] >> (8 * (7 - i % 8)));
}

// mod-n reduction of a 256-bit big-endian value (for digests and x-coords)
U256 scalar_from_be(std::span<const uint8_t> b32) {
    U256 v = from_be_bytes(b32);
    while (cmp(v, N) >= 0) {
        U256 t;
        sub(t, v, N);
        v = t;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Point arithmetic, Jacobian coordinates, curve y^2 = x^3 + 7
// ---------------------------------------------------------------------------

struct Affine {
    U256 x{}, y{};
    bool inf = true;
};

struct Jacobian {
    U256 x{}, y{}, z{};
    bool inf = true;
};

Jacobian to_jacobian(const Affine& a) {
    if (a.inf) return {};
    return {a.x, a.y, {1, 0, 0, 0}, false};
}

Jacobian dbl(const Jacobian& pt) {
    if (pt.inf || is_zero(pt.y)) return {};
    U256 a = fsqr(pt.x);
    U256 b = fsqr(pt.y);
    U256 c = fsqr(b);
    // d = 2*((x+b)^2 - a - c)
    U256 t = fsqr(fadd(pt.x, b));
    U256 d = fsub(fsub(t, a), c);
    d = fadd(d, d);
    U256 e = fadd(fadd(a, a), a);
    U256 f = fsqr(e);
    U256 x3 = fsub(f, fadd(d, d));
    U256 c8 = fadd(c, c);
    c8 = fadd(c8, c8);
    c8 = fadd(c8, c8);
    U256 y3 = fsub(fmul(e, fsub(d, x3)), c8);
    U256 z3 = fmul(fadd(pt.y, pt.y), pt.z);
    return {x3, y3, z3, false};
}

Jacobian add_mixed(const Jacobian& p, const Affine& q) {
    if (q.inf) return p;
    if (p.inf) return to_jacobian(q);
    U256 z1z1 = fsqr(p.z);
    U256 u2 = fmul(q.x, z1z1);
    U256 s2 = fmul(fmul(q.y, p.z), z1z1);
    U256 h = fsub(u2, p.x);
    U256 r = fsub(s2, p.y);
    if (is_zero(h)) {
        if (is_zero(r)) return dbl(p);
        return {};
    }
    U256 hh = fsqr(h);
    U256 hhh = fmul(h, hh);
    U256 v = fmul(p.x, hh);
    U256 x3 = fsub(fsub(fsqr(r), hhh), fadd(v, v));
    U256 y3 = fsub(fmul(r, fsub(v, x3)), fmul(p.y, hhh));
    U256 z3 = fmul(p.z, h);
    return {x3, y3, z3, false};
}

Jacobian add_jac(const Jacobian& p, const Jacobian& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    U256 z1z1 = fsqr(p.z);
    U256 z2z2 = fsqr(q.z);
    U256 u1 = fmul(p.x, z2z2);
    U256 u2 = fmul(q.x, z1z1);
    U256 s1 = fmul(fmul(p.y, q.z), z2z2);
    U256 s2 = fmul(fmul(q.y, p.z), z1z1);
    U256 h = fsub(u2, u1);
    U256 r = fsub(s2, s1);
    if (is_zero(h)) {
        if (is_zero(r)) return dbl(p);
        return {};
    }
    U256 hh = fsqr(h);
    U256 hhh = fmul(h, hh);
    U256 v = fmul(u1, hh);
    U256 x3 = fsub(fsub(fsqr(r), hhh), fadd(v, v));
    U256 y3 = fsub(fmul(r, fsub(v, x3)), fmul(s1, hhh));
    U256 z3 = fmul(fmul(p.z, q.z), h);
    return {x3, y3, z3, false};
}

Affine to_affine(const Jacobian& p) {
    if (p.inf) return {};
    U256 zi = finv(p.z);
    U256 zi2 = fsqr(zi);
    return {fmul(p.x, zi2), fmul(p.y, fmul(zi, zi2)), false};
}

// 4-bit windowed multiply for arbitrary points.
Jacobian mul_point(const U256& k, const Affine& pt) {
    Jacobian tbl[16];
    tbl[1] = to_jacobian(pt);
    tbl[2] = dbl(tbl[1]);
    for (int i = 3; i < 16; ++i) tbl[i] = add_mixed(tbl[i - 1], pt);

    Jacobian acc;
    for (int nib = 63; nib >= 0; --nib) {
        if (!acc.inf) {
            acc = dbl(acc);
            acc = dbl(acc);
            acc = dbl(acc);
            acc = dbl(acc);
        }
        unsigned d =
            static_cast<unsigned>(k[nib / 16] >> (4 * (nib % 16))) & 0xF;
        if (d) acc = add_jac(acc, tbl[d]);
    }
    return acc;
}

// Fixed-base comb for G: table[w][d-1] = d * 2^(4w) * G, affine.
struct GTable {
    Affine entry[64][15];

    GTable() {
        Jacobian jac[64][15];
        Jacobian base = to_jacobian({GX, GY, false});
        for (int w = 0; w < 64; ++w) {
            jac[w][0] = base;
            for (int d = 1; d < 15; ++d) jac[w][d] = add_jac(jac[w][d - 1], base);
            if (w < 63) {
                base = dbl(dbl(dbl(dbl(base))));
            }
        }
        // batch-normalize with one field inversion (Montgomery trick)
        U256 prefix[64 * 15];
        U256 acc = {1, 0, 0, 0};
        for (int i = 0; i < 64 * 15; ++i) {
            prefix[i] = acc;
            acc = fmul(acc, jac[i / 15][i % 15].z);
        }
        U256 inv_all = finv(acc);
        for (int i = 64 * 15 - 1; i >= 0; --i) {
            const Jacobian& j = jac[i / 15][i % 15];
            U256 zi = fmul(inv_all, prefix[i]);
            inv_all = fmul(inv_all, j.z);
            U256 zi2 = fsqr(zi);
            entry[i / 15][i % 15] = {fmul(j.x, zi2), fmul(j.y, fmul(zi, zi2)), false};
        }
    }
};

const GTable& g_table() {
    static const GTable tbl;
    return tbl;
}

Jacobian mul_g(const U256& k) {
    const GTable& tbl = g_table();
    Jacobian acc;
    for (int w = 0; w < 64; ++w) {
        unsigned d = static_cast<unsigned>(k[w / 16] >> (4 * (w % 16))) & 0xF;
        if (d) acc = add_mixed(acc, tbl.entry[w][d - 1]);
    }
    return acc;
}

bool on_curve(const Affine& pt) {
    if (pt.inf) return false;
    U256 lhs = fsqr(pt.y);
    U256 rhs = fadd(fmul(fsqr(pt.x), pt.x), {7, 0, 0, 0});
    return cmp(lhs, rhs) == 0;
}

std::optional<Affine> decompress(const PublicKeyBytes& pk) {
    if (pk[0] != 0x02 && pk[0] != 0x03) return std::nullopt;
    U256 x = from_be_bytes(std::span<const uint8_t>(pk.data() + 1, 32));
    if (cmp(x, P) >= 0) return std::nullopt;
    U256 rhs = fadd(fmul(fsqr(x), x), {7, 0, 0, 0});
    U256 y = fsqrt(rhs);
    if (cmp(fsqr(y), rhs) != 0) return std::nullopt; // not a quadratic residue
    bool want_odd = pk[0] == 0x03;
    if ((y[0] & 1) != (want_odd ? 1u : 0u)) y = fsub({0, 0, 0, 0}, y);
    Affine pt{x, y, false};
    if (!on_curve(pt)) return std::nullopt;
    return pt;
}

PublicKeyBytes compress(const Affine& pt) {
    PublicKeyBytes out{};
    out[0] = (pt.y[0] & 1) ? 0x03 : 0x02;
    to_be_bytes(pt.x, out.data() + 1);
    return out;
}

// ---------------------------------------------------------------------------
// RFC 6979 deterministic nonces (HMAC-SHA256, q = n)
// ---------------------------------------------------------------------------

class NonceRfc6979 {
public:
    NonceRfc6979(const PrivateKeyBytes& sk, const Hash256& digest) {
        uint8_t z_reduced[32];
        to_be_bytes(scalar_from_be(digest), z_reduced);

        std::memset(v_, 0x01, 32);
        std::memset(k_, 0x00, 32);
        update(0x00, sk.data(), z_reduced);
        update(0x01, sk.data(), z_reduced);
    }

    U256 next() {
        while (true) {
            Hash256 v = hmac_sha256({k_, 32}, {v_, 32});
            std::memcpy(v_, v.data(), 32);
            U256 k = from_be_bytes(v);
            if (!is_zero(k) && cmp(k, N) < 0) return k;
            retune();
        }
    }

private:
    void update(uint8_t tag, const uint8_t* sk, const uint8_t* z) {
        uint8_t msg[32 + 1 + 32 + 32];
        std::memcpy(msg, v_, 32);
        msg[32] = tag;
        std::memcpy(msg + 33, sk, 32);
        std::memcpy(msg + 65, z, 32);
        Hash256 k = hmac_sha256({k_, 32}, {msg, sizeof(msg)});
        std::memcpy(k_, k.data(), 32);
        Hash256 v = hmac_sha256({k_, 32}, {v_, 32});
        std::memcpy(v_, v.data(), 32);
    }

    void retune() {
        uint8_t msg[33];
        std::memcpy(msg, v_, 32);
        msg[32] = 0x00;
        Hash256 k = hmac_sha256({k_, 32}, {msg, sizeof(msg)});
        std::memcpy(k_, k.data(), 32);
        Hash256 v = hmac_sha256({k_, 32}, {v_, 32});
        std::memcpy(v_, v.data(), 32);
    }

    uint8_t v_[32];
    uint8_t k_[32];
};

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

bool is_valid_private_key(const PrivateKeyBytes& sk) {
    U256 d = from_be_bytes(sk);
    return !is_zero(d) && cmp(d, N) < 0;
}

PublicKeyBytes derive_public_key(const PrivateKeyBytes& sk) {
    U256 d = from_be_bytes(sk);
    if (is_zero(d) || cmp(d, N) >= 0)
        throw std::invalid_argument("secp256k1: invalid private key");
    return compress(to_affine(mul_g(d)));
}

SignatureBytes sign_digest(const PrivateKeyBytes& sk, const Hash256& digest) {
    U256 d = from_be_bytes(sk);
    if (is_zero(d) || cmp(d, N) >= 0)
        throw std::invalid_argument("secp256k1: invalid private key");

    U256 z = scalar_from_be(digest);
    NonceRfc6979 nonce(sk, digest);
    while (true) {
        U256 k = nonce.next();
        Affine R = to_affine(mul_g(k));
        uint8_t rx[32];
        to_be_bytes(R.x, rx);
        U256 r = scalar_from_be(rx);
        if (is_zero(r)) continue;
        U256 s = smul(sinv(k), add_mod(z, smul(r, d), N));
        if (is_zero(s)) continue;
        if (cmp(s, N_HALF) > 0) {
            U256 t;
            sub(t, N, s);
            s = t;
        }
        SignatureBytes sig{};
        to_be_bytes(r, sig.data());
        to_be_bytes(s, sig.data() + 32);
        return sig;
    }
}

bool verify_digest(const PublicKeyBytes& pk, const Hash256& digest,
                   const SignatureBytes& sig) {
    std::optional<Affine> q = decompress(pk);
    if (!q) return false;

    U256 r = from_be_bytes(std::span<const uint8_t>(sig.data(), 32));
    U256 s = from_be_bytes(std::span<const uint8_t>(sig.data() + 32, 32));
    if (is_zero(r) || cmp(r, N) >= 0) return false;
    if (is_zero(s) || cmp(s, N) >= 0) return false;

    U256 z = scalar_from_be(digest);
    U256 w = sinv(s);
    U256 u1 = smul(z, w);
    U256 u2 = smul(r, w);

    Jacobian acc = add_jac(mul_g(u1), mul_point(u2, *q));
    if (acc.inf) return false;
    Affine R = to_affine(acc);
    uint8_t rx[32];
    to_be_bytes(R.x, rx);
    return cmp(scalar_from_be(rx), r) == 0;
}

PrivateKeyBytes private_key_from_seed(std::span<const uint8_t> seed) {
    uint8_t counter = 0;
    while (true) {
        Sha256 h;
        h.write(seed);
        h.write({&counter, 1});
        Hash256 cand = h.finalize();
        PrivateKeyBytes sk;
        std::memcpy(sk.data(), cand.data(), 32);
        if (is_valid_private_key(sk)) return sk;
        ++counter;
    }
}

} // namespace bychain::crypto
