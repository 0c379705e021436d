"""Exact convolution of coefficient vectors modulo p.

Small products go through ``np.convolve`` on int64; anything that could
overflow or would be quadratic-slow is packed into one big integer
(Kronecker substitution) and multiplied by GMP.
"""

import gmpy2
import numpy as np

_DIRECT_LIMIT = 1 << 16  # na * nb above this switches to Kronecker packing


def _pack(v, slot):
    buf = np.zeros((len(v), slot), dtype=np.uint8)
    raw = np.ascontiguousarray(v, dtype="<u8").view(np.uint8).reshape(-1, 8)
    w = min(slot, 8)
    buf[:, :w] = raw[:, :w]
    return gmpy2.mpz.from_bytes(buf.tobytes(), "little")


def _limb(cols):
    tmp = np.zeros((cols.shape[0], 8), dtype=np.uint8)
    tmp[:, : cols.shape[1]] = cols
    return tmp.view("<u8").ravel()


def _kronecker(a, b, p, bound):
    slot = (bound.bit_length() + 8) // 8
    if slot > 16:
        raise OverflowError("coefficient bound too large for two-limb unpacking")
    n = len(a) + len(b) - 1
    prod = _pack(a, slot) * _pack(b, slot)
    raw = np.frombuffer(prod.to_bytes(n * slot, "little"), dtype=np.uint8).reshape(n, slot)
    mod = np.uint64(p)
    lo = _limb(raw[:, : min(slot, 8)]) % mod
    if slot > 8:
        hi = _limb(raw[:, 8:]) % mod
        lo = (lo + hi * np.uint64(pow(2, 64, p))) % mod
    return lo.astype(np.int64)


def convolve_mod(a, b, p):
    """Coefficients of the product of two polynomials with entries in [0, p)."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return np.zeros(0, dtype=np.int64)
    bound = min(na, nb) * (p - 1) ** 2
    if bound < (1 << 62) and na * nb <= _DIRECT_LIMIT:
        return np.convolve(a, b) % p
    return _kronecker(a, b, p, bound)


def reduce_ext(c, modulus, p):
    """Reduce rows of ``c`` (shape (n, m), m >= k) modulo a monic degree-k polynomial.

    ``modulus`` holds the k low coefficients; t^k is replaced by -sum(modulus[i] t^i).
    """
    k = len(modulus)
    c = c.copy()
    low = np.asarray(modulus, dtype=np.int64)
    for j in range(c.shape[1] - 1, k - 1, -1):
        top = c[:, j : j + 1]
        c[:, j - k : j] = (c[:, j - k : j] - top * low) % p
    return c[:, :k] % p


def mul_ext(a, b, p, modulus):
    """Product of two polynomials whose coefficients are F_{p^k} residues.

    ``a`` and ``b`` have shape (n, k). Coefficients are interleaved with
    stride 2k-1 so one flat convolution yields every t-degree without
    carries between neighbouring slots.
    """
    na, nb = a.shape[0], b.shape[0]
    if na == 0 or nb == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64)
    if modulus is None:
        return convolve_mod(a[:, 0], b[:, 0], p).reshape(-1, 1)
    k = len(modulus)
    w = 2 * k - 1
    fa = np.zeros((na, w), dtype=np.int64)
    fb = np.zeros((nb, w), dtype=np.int64)
    fa[:, :k] = a
    fb[:, :k] = b
    # the last w - 1 entries of the flat product are always zero
    flat = convolve_mod(fa.ravel(), fb.ravel(), p)[: (na + nb - 1) * w]
    return reduce_ext(flat.reshape(na + nb - 1, w), modulus, p)
