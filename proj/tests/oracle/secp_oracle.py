#!/usr/bin/env python3
"""Independent secp256k1 / RFC 6979 oracle.

Pure big-integer arithmetic plus hashlib/hmac only. Used to freeze the
expected values asserted in tests/test_crypto.cpp; it shares no code with
the C++ implementation.
"""
import hashlib
import hmac

P = 2**256 - 2**32 - 977
N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798
GY = 0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8


def inv(a, m):
    return pow(a, m - 2, m)


def point_add(p1, p2):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and (y1 + y2) % P == 0:
        return None
    if p1 == p2:
        lam = (3 * x1 * x1) * inv(2 * y1, P) % P
    else:
        lam = (y2 - y1) * inv(x2 - x1, P) % P
    x3 = (lam * lam - x1 - x2) % P
    y3 = (lam * (x1 - x3) - y1) % P
    return (x3, y3)


def point_mul(k, pt):
    acc = None
    while k:
        if k & 1:
            acc = point_add(acc, pt)
        pt = point_add(pt, pt)
        k >>= 1
    return acc


def compress(pt):
    x, y = pt
    return bytes([0x02 + (y & 1)]) + x.to_bytes(32, "big")


def rfc6979_k(sk, z):
    """RFC 6979 section 3.2, HMAC-SHA256, q = N."""
    x = sk.to_bytes(32, "big")
    h1 = z.to_bytes(32, "big")
    # bits2octets: h1 interpreted as int, reduced mod N, back to 32 bytes
    bo = (int.from_bytes(h1, "big") % N).to_bytes(32, "big")
    V = b"\x01" * 32
    K = b"\x00" * 32
    K = hmac.new(K, V + b"\x00" + x + bo, hashlib.sha256).digest()
    V = hmac.new(K, V, hashlib.sha256).digest()
    K = hmac.new(K, V + b"\x01" + x + bo, hashlib.sha256).digest()
    V = hmac.new(K, V, hashlib.sha256).digest()
    while True:
        V = hmac.new(K, V, hashlib.sha256).digest()
        k = int.from_bytes(V, "big")
        if 1 <= k < N:
            return k
        K = hmac.new(K, V + b"\x00", hashlib.sha256).digest()
        V = hmac.new(K, V, hashlib.sha256).digest()


def sign(sk, z):
    k = rfc6979_k(sk, z)
    R = point_mul(k, (GX, GY))
    r = R[0] % N
    s = inv(k, N) * (z + r * sk) % N
    if s > N // 2:
        s = N - s
    return r, s


def main():
    out = []

    def emit(label, value):
        out.append(f"{label} = {value}")

    # -- point multiples of G, compressed --
    for k in [1, 2, 3, 7, 0xDEADBEEF, N - 1]:
        pt = point_mul(k, (GX, GY))
        emit(f"mulG[{hex(k)}]", compress(pt).hex())

    # -- pubkey for a fixed private scalar --
    sk = int.from_bytes(hashlib.sha256(b"bychain oracle key 1").digest(), "big") % N
    emit("sk1", sk.to_bytes(32, "big").hex())
    emit("pk1", compress(point_mul(sk, (GX, GY))).hex())

    # -- deterministic signature over a fixed message --
    msg = b"proof-of-location oracle message"
    z = int.from_bytes(hashlib.sha256(msg).digest(), "big")
    emit("msg_sha256", hashlib.sha256(msg).digest().hex())
    k = rfc6979_k(sk, z)
    emit("k6979", k.to_bytes(32, "big").hex())
    r, s = sign(sk, z)
    emit("sig_r", r.to_bytes(32, "big").hex())
    emit("sig_s", s.to_bytes(32, "big").hex())

    # -- second keypair to freeze wrong-key rejection inputs --
    sk2 = int.from_bytes(hashlib.sha256(b"bychain oracle key 2").digest(), "big") % N
    emit("sk2", sk2.to_bytes(32, "big").hex())
    emit("pk2", compress(point_mul(sk2, (GX, GY))).hex())

    # -- HMAC-SHA256 vector (RFC 4231 case 1) --
    emit("hmac_rfc4231_1",
         hmac.new(b"\x0b" * 20, b"Hi There", hashlib.sha256).digest().hex())

    # -- SHA-256 vectors --
    emit("sha256_empty", hashlib.sha256(b"").digest().hex())
    emit("sha256_abc", hashlib.sha256(b"abc").digest().hex())

    # -- address derivation: first 20 bytes of SHA256(SHA256(pk)) --
    pk1 = compress(point_mul(sk, (GX, GY)))
    emit("addr1", hashlib.sha256(hashlib.sha256(pk1).digest()).digest()[:20].hex())

    print("\n".join(out))


if __name__ == "__main__":
    main()
