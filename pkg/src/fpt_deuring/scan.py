"""Prime sweeps over the x^b y^b (x+y)^c (x+ay)^c family, with an
independent supersingularity check by counting points on Legendre curves.

A prime p is in P when p = 1 mod (b+c) and H{c(p-1)/(b+c)}(a) != 0 mod p.
For b = c = 1 that condition says y^2 = x(x-1)(x-a) is ordinary at p, which
``is_supersingular`` verifies by brute-force enumeration without touching
any Deuring polynomial.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .deuring import deuring_eval
from .errors import CapacityError, DomainError
from .gf import FieldElement, make_field

SCAN_LIMIT = 10**6
CSV_COLUMNS = ("p", "admissible", "n", "h_zero", "in_p", "ss_check")

CONGRUENCE = "Congruence"
DENOMINATOR = "DenominatorDivisible"
DEGENERATE = "CrossRatioDegenerate"


@dataclass(frozen=True)
class ScanQuery:
    b: int
    c: int
    a: Fraction
    prime_bound: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise DomainError("b and c must be positive")
        object.__setattr__(self, "a", Fraction(self.a))


@dataclass(frozen=True)
class ScanRecord:
    p: int
    admissible: bool
    n: int | None
    h_zero: bool | None
    in_p: bool
    ss_check: bool | None = None
    reason: str | None = None


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).tolist()


def _quadratic_character(p: int) -> np.ndarray:
    chi = np.full(p, -1, dtype=np.int64)
    chi[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    chi[0] = 0
    return chi


def _legendre_lambda(lam, p: int) -> int:
    if isinstance(lam, FieldElement):
        if lam.desc.p != p or lam.desc.k != 1:
            raise DomainError("lambda must lie in the prime field F_p")
        lam = lam.rep[0]
    lam %= p
    if p < 5:
        raise DomainError("point counting criterion needs p >= 5")
    if p > SCAN_LIMIT:
        raise CapacityError(f"p = {p} exceeds {SCAN_LIMIT}")
    if lam in (0, 1):
        raise DomainError("y^2 = x(x-1)(x-lambda) is singular for lambda in {0, 1}")
    return lam


def count_points_legendre_curve(lam, p: int) -> int:
    """#E(F_p) for y^2 = x(x-1)(x-lambda), point at infinity included."""
    lam = _legendre_lambda(lam, p)
    x = np.arange(p, dtype=np.int64)
    rhs = x * (x - 1) % p * ((x - lam) % p) % p
    return p + 1 + int(_quadratic_character(p)[rhs].sum())


def is_supersingular(lam, p: int) -> bool:
    """Trace zero, i.e. exactly p + 1 points (the criterion for p >= 5)."""
    return count_points_legendre_curve(lam, p) == p + 1


def _record(q: ScanQuery, p: int, ss_check: bool) -> ScanRecord:
    a = q.a
    if a.denominator % p == 0:
        return ScanRecord(p, False, None, None, False, reason=DENOMINATOR)
    a_mod = a.numerator * pow(a.denominator, -1, p) % p
    if a_mod in (0, 1):
        return ScanRecord(p, False, None, None, False, reason=DEGENERATE)
    s = q.b + q.c
    if (p - 1) % s:
        return ScanRecord(p, False, None, None, False, reason=CONGRUENCE)
    n = q.c * (p - 1) // s
    h_zero = deuring_eval(n, make_field(p)(a_mod)).is_zero()
    ss = is_supersingular(a_mod, p) if ss_check and p >= 5 else None
    return ScanRecord(p, True, n, h_zero, not h_zero, ss)


def scan_primes(q: ScanQuery, ss_check: bool = False) -> list[ScanRecord]:
    """One record per prime p <= q.prime_bound, ascending.

    ``ss_check`` adds the point-counting verdict; it is only defined for
    b = c = 1 and is left empty for p < 5.
    """
    if q.prime_bound > SCAN_LIMIT:
        raise CapacityError(f"prime bound {q.prime_bound} exceeds {SCAN_LIMIT}")
    if ss_check and (q.b, q.c) != (1, 1):
        raise DomainError("the supersingularity cross-check needs b = c = 1")
    if q.a in (0, 1):
        return [ScanRecord(p, False, None, None, False, reason=DEGENERATE)
                for p in primes_up_to(q.prime_bound)]
    return [_record(q, p, ss_check) for p in primes_up_to(q.prime_bound)]


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def report(records: list[ScanRecord], fmt: str = "csv") -> bytes:
    """Serialise records as CSV (fixed columns) or a JSON array."""
    records = sorted(records, key=lambda r: r.p)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow([_cell(getattr(r, col)) for col in CSV_COLUMNS])
        return buf.getvalue().encode()
    if fmt == "json":
        return (json.dumps([asdict(r) for r in records], indent=2) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def parse_json_report(data: bytes) -> list[ScanRecord]:
    return [ScanRecord(**obj) for obj in json.loads(data)]
