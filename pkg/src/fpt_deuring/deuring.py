"""Deuring polynomials H{n}(l) = sum_i C(n, i)^2 l^i reduced mod p.

Also the antiderivatives F{n} (antiderivative of H{n} with zero constant
term, so F{n}' = H{n}), the Legendre polynomials P_n mod p, and the two
six-element orbits permuting the roots of H{(p-1)/2} and P_{(p-1)/2}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, RangeError
from .gf import FieldDesc, FieldElement, make_field
from .poly import UniPoly, uni_roots


def p_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n, lowest first; empty for n = 0."""
    if n < 0:
        raise RangeError("n must be nonnegative")
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def binomial_rows(p: int, ns: Iterable[int]) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (n, [C(n, 0), ..., C(n, n)] mod p) for the requested n in ascending order.

    One Pascal sweep serves the whole batch, so asking for many rows costs no
    more than asking for the largest.
    """
    wanted = sorted(set(ns))
    if not wanted:
        return
    row = np.zeros(wanted[-1] + 1, dtype=np.int64)
    row[0] = 1
    cur = 0
    for n in wanted:
        while cur < n:
            row[1 : cur + 2] = (row[1 : cur + 2] + row[: cur + 1]) % p
            cur += 1
        yield n, row[: n + 1].copy()


def _from_row(row: np.ndarray, desc: FieldDesc) -> UniPoly:
    return UniPoly(desc, row * row % desc.p)


def deuring_direct(n: int, desc: FieldDesc) -> UniPoly:
    """H{n} over ``desc`` straight from its defining sum."""
    if n < 0:
        raise RangeError("n must be nonnegative")
    (_, row), = binomial_rows(desc.p, [n])
    return _from_row(row, desc)


def deuring_direct_many(ns: Iterable[int], desc: FieldDesc) -> Iterator[tuple[int, UniPoly]]:
    for n, row in binomial_rows(desc.p, ns):
        yield n, _from_row(row, desc)


@lru_cache(maxsize=4096)
def _digit_coeffs(b: int, p: int) -> tuple[int, ...]:
    """Coefficients of H{b} for a single digit b < p.

    Uses C(b, i+1) = C(b, i) (b - i) / (i + 1), which is O(b) and valid here
    because every i + 1 <= b is a unit mod p.
    """
    inv = [0, 1]
    for i in range(2, b + 1):
        inv.append(-(p // i) * inv[p % i] % p)
    c, out = 1, [1]
    for i in range(b):
        c = c * (b - i) * inv[i + 1] % p
        out.append(c * c % p)
    return tuple(out)


def deuring_schur_product(n: int, desc: FieldDesc) -> UniPoly:
    """The product H{b_0} H{b_1}^p ... H{b_e}^(p^e) over the base-p digits of n.

    Each H{b_i}^(p^i) equals H{b_i}(l^(p^i)) because the coefficients are
    fixed by Frobenius, and since deg H{b_i} < p the factors occupy disjoint
    digit positions: the product is a Kronecker product of coefficient vectors.
    """
    p = desc.p
    vec = np.ones(1, dtype=np.int64)
    for i, b in enumerate(p_digits(n, p)):
        block = p**i
        padded = np.zeros(block, dtype=np.int64)
        padded[: len(vec)] = vec
        vec = np.kron(np.array(_digit_coeffs(b, p), dtype=np.int64), padded) % p
    return UniPoly(desc, vec)


def deuring_eval(n: int, a: FieldElement) -> FieldElement:
    """H{n}(a) through the digit factorisation; n may be arbitrarily large.

    H{b_i}(a)^(p^i) = H{b_i}(a^(p^i)), and a^(p^i) cycles with period k in
    F_{p^k}, so each (digit, i mod k) pair is evaluated at most once.
    """
    desc = a.desc
    p, k = desc.p, desc.k
    conj = [a]
    for _ in range(k - 1):
        conj.append(conj[-1].frobenius())
    seen: dict[tuple[int, int], FieldElement] = {}
    result = desc.one
    for i, b in enumerate(p_digits(n, p)):
        if b == 0:
            continue
        key = (b, i % k)
        if key not in seen:
            poly = UniPoly(make_field(p), _digit_coeffs(b, p))
            seen[key] = poly(conj[i % k])
        result = result * seen[key]
        if result.is_zero():
            break
    return result


def antiderivative_F(n: int, desc: FieldDesc) -> UniPoly:
    """F{n} = sum_i C(n, i)^2 / (i + 1) l^(i + 1), the antiderivative of H{n}.

    Needs 2n < p so that every divisor i + 1 is a unit.
    """
    p = desc.p
    if n < 0 or 2 * n >= p:
        raise RangeError(f"antiderivative_F needs 0 <= n < p/2, got n = {n}, p = {p}")
    (_, row), = binomial_rows(p, [n])
    coeffs = [0] + [int(c) * int(c) * pow(i + 1, -1, p) % p for i, c in enumerate(row)]
    return UniPoly(desc, coeffs)


def legendre_poly(n: int, desc: FieldDesc) -> UniPoly:
    """P_n mod p from P_n(x) = 2^-n sum_i C(n, i)^2 (x - 1)^(n - i) (x + 1)^i."""
    p = desc.p
    if p == 2:
        raise RangeError("Legendre polynomials need 2 to be invertible")
    if not 0 <= n < p:
        raise RangeError(f"legendre_poly needs 0 <= n < p, got n = {n}")
    (_, row), = binomial_rows(p, [n])
    xm, xp = UniPoly(desc, [-1, 1]), UniPoly(desc, [1, 1])
    minus = [UniPoly(desc, [1])]
    plus = [UniPoly(desc, [1])]
    for _ in range(n):
        minus.append(minus[-1] * xm)
        plus.append(plus[-1] * xp)
    total = UniPoly(desc)
    for i in range(n + 1):
        c = int(row[i]) ** 2 % p
        if c:
            total = total + (minus[n - i] * plus[i]) * c
    return total * pow(pow(2, n, p), -1, p)


def deuring_root_set(n: int, desc: FieldDesc, search: FieldDesc | None = None) -> list[FieldElement]:
    """Roots of H{n} lying in ``search`` (default: ``desc``), sorted."""
    return [r for r, _ in uni_roots(deuring_direct(n, desc), search or desc)]


def _dedupe(values) -> list[FieldElement]:
    uniq = {v.key: v for v in values}
    return [uniq[k] for k in sorted(uniq)]


def mobius_orbit(a: FieldElement) -> list[FieldElement]:
    """{a, 1/a, 1-a, 1/(1-a), a/(a-1), (a-1)/a}, deduplicated and sorted."""
    if a.is_zero() or a == 1:
        raise DomainError("the cross-ratio orbit needs a not in {0, 1}")
    one = a.desc.one
    b = one - a
    return _dedupe([a, a.inv(), b, b.inv(), a / (a - one), (a - one) / a])


def legendre_root_orbit(b: FieldElement) -> list[FieldElement]:
    """{+-b, +-(3+b)/(b-1), +-(3-b)/(1+b)}, deduplicated and sorted."""
    if b == 1 or b == -1:
        raise DomainError("the Legendre root orbit needs b not in {1, -1}")
    u = (b + 3) / (b - 1)
    v = (3 - b) / (b + 1)
    return _dedupe([b, -b, u, -u, v, -v])
