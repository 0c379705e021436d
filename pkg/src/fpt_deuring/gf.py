"""Prime fields F_p and their extensions F_{p^k} = F_p[t]/(m(t)).

The modulus m is the lexicographically smallest monic irreducible of degree
k, comparing coefficients from the constant term upwards, so every run picks
the same basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

import numpy as np

from ._kernel import reduce_ext
from .errors import DivisionByZero, FieldMismatch, PrimalityError, RangeError

MAX_PRIME = 1 << 31
MAX_DEGREE = 8


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for n < 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


# Plain-list polynomial helpers over F_p (low degree first), used only to
# certify moduli before any FieldDesc exists.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        q = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - q * c) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(m, p) -> bool:
    """Distinct-degree test for a monic polynomial ``m`` (coefficients low first)."""
    k = len(m) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    t = [0, 1]
    power = t
    for _ in range(k // 2):
        power = _ppowmod(power, p, m, p)
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=k):
        if low[0] == 0:
            continue
        m = list(low) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldDesc:
    """Descriptor of F_{p^k}. ``modulus`` is None for prime fields."""

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = field(default=None)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    @property
    def gen(self) -> FieldElement:
        """The class of t (only meaningful for k > 1)."""
        if self.k == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def __call__(self, value) -> FieldElement:
        """Build an element from an int (a constant) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.desc != self:
                raise FieldMismatch(f"{value.desc} vs {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.k - 1))
        rep = [int(c) % self.p for c in value]
        if len(rep) > self.k:
            raise RangeError(f"representation longer than extension degree {self.k}")
        return FieldElement(self, tuple(rep) + (0,) * (self.k - len(rep)))

    def from_index(self, idx: int) -> FieldElement:
        """Element whose base-p digits (low first) are the coordinates."""
        rep = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            rep.append(r)
        return FieldElement(self, tuple(rep))

    def elements(self):
        for i in range(self.order):
            yield self.from_index(i)

    def __str__(self) -> str:
        return f"F_{self.p}" if self.k == 1 else f"F_{self.p}^{self.k}"

    # vectorised helpers over arrays of shape (M, k)

    def all_reps(self) -> np.ndarray:
        """Every element, as rows ordered by ``from_index``."""
        idx = np.arange(self.order, dtype=np.int64)
        cols = [(idx // self.p**j) % self.p for j in range(self.k)]
        return np.stack(cols, axis=1)

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        if self.k == 1:
            return a * b % p
        k = self.k
        out = np.zeros((a.shape[0], 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                out[:, i + j] = (out[:, i + j] + a[:, i] * b[:, j]) % p
        return reduce_ext(out, self.modulus[:k], p)


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldDesc:
    """Return the (memoised) descriptor of F_{p^k}."""
    if not 1 <= k <= MAX_DEGREE:
        raise RangeError(f"extension degree {k} outside [1, {MAX_DEGREE}]")
    if p >= MAX_PRIME:
        raise RangeError(f"p = {p} exceeds the supported bound 2**31")
    if not is_prime(p):
        raise PrimalityError(f"{p} is not prime")
    if k == 1:
        return FieldDesc(p, 1, None)
    return FieldDesc(p, k, smallest_irreducible(p, k))


class FieldElement:
    """Immutable element of F_{p^k}, stored as a residue vector of length k."""

    __slots__ = ("desc", "rep")

    def __init__(self, desc: FieldDesc, rep: tuple[int, ...]):
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.desc != self.desc:
                raise FieldMismatch(f"cannot combine {self.desc} with {other.desc}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.desc(other)
        return NotImplemented

    @property
    def p(self) -> int:
        return self.desc.p

    @property
    def key(self) -> tuple[int, ...]:
        return self.rep

    def is_zero(self) -> bool:
        return not any(self.rep)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __int__(self) -> int:
        if any(self.rep[1:]):
            raise ValueError(f"{self!r} is not in the prime field")
        return self.rep[0]

    def in_prime_field(self) -> bool:
        return not any(self.rep[1:])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rep == other.rep

    def __hash__(self):
        return hash((self.desc.p, self.desc.k, self.rep))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.desc.p
        return FieldElement(self.desc, tuple((x + y) % p for x, y in zip(self.rep, other.rep)))

    __radd__ = __add__

    def __neg__(self):
        p = self.desc.p
        return FieldElement(self.desc, tuple(-x % p for x in self.rep))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.desc
        p = d.p
        if d.k == 1:
            return FieldElement(d, (self.rep[0] * other.rep[0] % p,))
        k = d.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(self.rep):
            if x:
                for j, y in enumerate(other.rep):
                    prod[i + j] += x * y
        m = d.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * m[i]
        return FieldElement(d, tuple(c % p for c in prod[:k]))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        d = self.desc
        if d.k == 1:
            return FieldElement(d, (pow(self.rep[0], -1, d.p),))
        return self ** (d.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        d = self.desc
        if d.k == 1:
            return FieldElement(d, (pow(self.rep[0], n, d.p),))
        result, base = d.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self) -> FieldElement:
        """x -> x^p."""
        if self.desc.k == 1:
            return self
        return self**self.desc.p

    def to_json(self) -> dict:
        return {"p": self.desc.p, "k": self.desc.k, "rep": list(self.rep)}

    @classmethod
    def from_json(cls, obj: dict) -> FieldElement:
        return make_field(obj["p"], obj["k"])(obj["rep"])

    def __repr__(self):
        if self.desc.k == 1:
            return f"{self.rep[0]} (mod {self.desc.p})"
        return f"{list(self.rep)} in {self.desc}"


def embed(x, target: FieldDesc) -> FieldElement:
    """Send an element of F_p (or a plain int) to the constant of ``target``."""
    if isinstance(x, FieldElement):
        if x.desc.p != target.p or x.desc.k != 1:
            raise FieldMismatch(f"cannot embed {x.desc} into {target}")
        return target(x.rep[0])
    return target(int(x))
