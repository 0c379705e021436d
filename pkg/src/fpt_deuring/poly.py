"""Dense univariate polynomials and bivariate forms over F_{p^k}.

Coefficients are kept as int64 arrays of shape (n, k): row i is the residue
vector of the i-th coefficient. Products go through the exact convolution
kernel in ``_kernel``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from ._kernel import mul_ext
from .errors import CapacityError, DivisionByZero, DomainError, FieldMismatch, ParityError, RangeError
from .gf import FieldDesc, FieldElement, make_field

NEG_INF = float("-inf")
ROOT_SCAN_LIMIT = 10**6
WINDOW_LIMIT = 10**7


def _as_array(desc: FieldDesc, coeffs) -> np.ndarray:
    if isinstance(coeffs, np.ndarray):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
            if desc.k > 1:
                arr = np.hstack([arr, np.zeros((arr.shape[0], desc.k - 1), dtype=np.int64)])
        return arr % desc.p
    rows = [desc(c).rep for c in coeffs]
    if not rows:
        return np.zeros((0, desc.k), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), desc.k)


def _trim(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr.any(axis=1))
    return arr[: nz[-1] + 1] if len(nz) else arr[:0]


def _scale_rows(desc: FieldDesc, arr: np.ndarray, c: FieldElement) -> np.ndarray:
    if desc.k == 1:
        return arr * c.rep[0] % desc.p
    return desc.vmul(arr, np.broadcast_to(np.array(c.rep, dtype=np.int64), arr.shape))


def _elem(desc: FieldDesc, row) -> FieldElement:
    return FieldElement(desc, tuple(int(v) for v in row))


def _lift(desc: FieldDesc, target: FieldDesc, arr: np.ndarray) -> np.ndarray:
    if desc == target:
        return arr
    if desc.p != target.p or desc.k != 1:
        raise FieldMismatch(f"cannot lift coefficients from {desc} to {target}")
    out = np.zeros((arr.shape[0], target.k), dtype=np.int64)
    out[:, 0] = arr[:, 0]
    return out


class UniPoly:
    """Polynomial in one variable, coefficients low degree first."""

    __slots__ = ("desc", "_c")

    def __init__(self, desc: FieldDesc, coeffs=()):
        self.desc = desc
        self._c = _trim(_as_array(desc, coeffs))

    @classmethod
    def _wrap(cls, desc, arr):
        obj = cls.__new__(cls)
        obj.desc = desc
        obj._c = _trim(arr)
        return obj

    @classmethod
    def monomial(cls, desc: FieldDesc, n: int, c=1) -> UniPoly:
        arr = np.zeros((n + 1, desc.k), dtype=np.int64)
        arr[n] = desc(c).rep
        return cls._wrap(desc, arr)

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(_elem(self.desc, r) for r in self._c)

    @property
    def array(self) -> np.ndarray:
        return self._c.copy()

    def ints(self) -> list[int]:
        """Coefficients as plain ints (prime-field polynomials only)."""
        if self.desc.k != 1:
            raise ValueError("ints() needs a prime-field polynomial")
        return [int(v) for v in self._c[:, 0]]

    @property
    def degree(self):
        return len(self._c) - 1 if len(self._c) else NEG_INF

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def lead(self) -> FieldElement:
        if self.is_zero():
            return self.desc.zero
        return _elem(self.desc, self._c[-1])

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self._c):
            return _elem(self.desc, self._c[i])
        return self.desc.zero

    def _check(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.desc != self.desc:
                raise FieldMismatch(f"{self.desc} vs {other.desc}")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return UniPoly(self.desc, [other])
        return NotImplemented

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._c.shape == other._c.shape and bool((self._c == other._c).all())

    def __hash__(self):
        return hash((self.desc, self._c.tobytes()))

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        n = max(len(a), len(b))
        out = np.zeros((n, self.desc.k), dtype=np.int64)
        out[: len(a)] += a
        out[: len(b)] += b
        return UniPoly._wrap(self.desc, out % self.desc.p)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._wrap(self.desc, -self._c % self.desc.p)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.scale(self.desc(other))
        other = self._check(other)
        if other is NotImplemented:
            return other
        d = self.desc
        return UniPoly._wrap(d, mul_ext(self._c, other._c, d.p, d.modulus[: d.k] if d.modulus else None))

    __rmul__ = __mul__

    def scale(self, c: FieldElement) -> UniPoly:
        return UniPoly._wrap(self.desc, _scale_rows(self.desc, self._c, self.desc(c)))

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise RangeError("negative polynomial power")
        result, base = UniPoly(self.desc, [1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self) -> UniPoly:
        if len(self._c) <= 1:
            return UniPoly(self.desc)
        idx = np.arange(1, len(self._c), dtype=np.int64).reshape(-1, 1) % self.desc.p
        return UniPoly._wrap(self.desc, self._c[1:] * idx % self.desc.p)

    def shift(self, m: int) -> UniPoly:
        """Multiply by lambda**m."""
        if self.is_zero():
            return self
        pad = np.zeros((m, self.desc.k), dtype=np.int64)
        return UniPoly._wrap(self.desc, np.vstack([pad, self._c]))

    def compose_power(self, m: int) -> UniPoly:
        """Substitute lambda -> lambda**m."""
        if self.is_zero():
            return self
        out = np.zeros(((len(self._c) - 1) * m + 1, self.desc.k), dtype=np.int64)
        out[::m] = self._c
        return UniPoly._wrap(self.desc, out)

    def lift(self, target: FieldDesc) -> UniPoly:
        return UniPoly._wrap(target, _lift(self.desc, target, self._c))

    def __call__(self, x) -> FieldElement:
        """Evaluate by Horner's rule. Prime-field polynomials accept extension points."""
        if not isinstance(x, FieldElement):
            x = self.desc(x)
        if x.desc != self.desc:
            if self.desc.k != 1 or x.desc.p != self.desc.p:
                raise FieldMismatch(f"cannot evaluate over {self.desc} at a point of {x.desc}")
        if x.desc.k == 1:
            p, xv, acc = self.desc.p, x.rep[0], 0
            for c in self._c[::-1, 0].tolist():
                acc = (acc * xv + c) % p
            return x.desc(acc)
        acc = x.desc.zero
        coeff = (lambda r: _elem(x.desc, r)) if self.desc == x.desc else (lambda r: x.desc(int(r[0])))
        for r in self._c[::-1]:
            acc = acc * x + coeff(r)
        return acc

    def eval_many(self, pts: np.ndarray, target: FieldDesc) -> np.ndarray:
        """Evaluate at every row of ``pts`` (residue vectors in ``target``)."""
        coeffs = _lift(self.desc, target, self._c)
        acc = np.zeros_like(pts)
        for row in coeffs[::-1]:
            acc = (target.vmul(acc, pts) + row) % target.p
        return acc

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self.scale(self.lead().inv())

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        d, p = self.desc, self.desc.p
        r = self._c.copy()
        db = len(other._c)
        nq = len(r) - db + 1
        if nq <= 0:
            return UniPoly(d), self
        q = np.zeros((nq, d.k), dtype=np.int64)
        inv_lead = other.lead().inv()
        for i in range(nq - 1, -1, -1):
            c = _elem(d, r[i + db - 1]) * inv_lead
            if c.is_zero():
                continue
            q[i] = c.rep
            r[i : i + db] = (r[i : i + db] - _scale_rows(d, other._c, c)) % p
        return UniPoly._wrap(d, q), UniPoly._wrap(d, r[: db - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def to_json(self) -> dict:
        return {"p": self.desc.p, "k": self.desc.k, "coeffs": self._c.tolist()}

    def __repr__(self):
        if self.is_zero():
            return f"UniPoly(0 over {self.desc})"
        if self.desc.k == 1:
            return f"UniPoly({self.ints()} over {self.desc})"
        return f"UniPoly({self._c.tolist()} over {self.desc})"


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (zero if both inputs vanish)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def uni_roots(f: UniPoly, search: FieldDesc | None = None) -> list[tuple[FieldElement, int]]:
    """All roots of ``f`` in ``search`` with multiplicities, by exhaustive scan.

    Roots are sorted by their residue vectors (low coordinate first).
    """
    search = search or f.desc
    if f.is_zero():
        raise DomainError("the zero polynomial has every point as a root")
    if search.order > ROOT_SCAN_LIMIT:
        raise CapacityError(f"{search} has {search.order} elements; scan limit is {ROOT_SCAN_LIMIT}")
    g = f.lift(search)
    pts = search.all_reps()
    vals = g.eval_many(pts, search)
    hits = np.flatnonzero(~vals.any(axis=1))
    found = []
    for i in hits:
        r = _elem(search, pts[i])
        linear = UniPoly(search, [-r, 1])
        mult, rest = 0, g
        while True:
            q, rem = divmod(rest, linear)
            if not rem.is_zero():
                break
            mult, rest = mult + 1, q
        found.append((r, mult))
    found.sort(key=lambda t: t[0].key)
    return found


@dataclass(frozen=True)
class ProjPoint:
    """Point (u : v) of P^1, normalised to (u/v : 1) or (1 : 0)."""

    u: FieldElement
    v: FieldElement

    @classmethod
    def of(cls, u: FieldElement, v: FieldElement) -> ProjPoint:
        if v.is_zero():
            if u.is_zero():
                raise DomainError("(0 : 0) is not a point of P^1")
            return cls(u.desc.one, u.desc.zero)
        return cls(u / v, v.desc.one)

    @classmethod
    def affine(cls, u: FieldElement) -> ProjPoint:
        return cls(u, u.desc.one)

    @classmethod
    def infinity(cls, desc: FieldDesc) -> ProjPoint:
        return cls(desc.one, desc.zero)

    @property
    def desc(self) -> FieldDesc:
        return self.u.desc

    def is_infinity(self) -> bool:
        return self.v.is_zero()

    @property
    def key(self):
        return (0,) if self.is_infinity() else (1,) + self.u.key

    def to_json(self):
        return None if self.is_infinity() else self.u.to_json()

    def __repr__(self):
        return "(1:0)" if self.is_infinity() else f"({self.u!r}:1)"


class BiForm:
    """Homogeneous form of degree d in x, y; entry i multiplies x^(d-i) y^i."""

    __slots__ = ("desc", "degree", "_c")

    def __init__(self, desc: FieldDesc, coeffs):
        self.desc = desc
        self._c = _as_array(desc, coeffs)
        if len(self._c) == 0:
            raise RangeError("a form needs at least one coefficient")
        self.degree = len(self._c) - 1

    @classmethod
    def _wrap(cls, desc, arr):
        obj = cls.__new__(cls)
        obj.desc, obj._c, obj.degree = desc, arr, len(arr) - 1
        return obj

    @classmethod
    def parse(cls, text: str, desc: FieldDesc) -> BiForm:
        """Read the ``"c0,c1,...,cd"`` syntax (c0 multiplies x^d)."""
        try:
            vals = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed coefficient list {text!r}") from exc
        return cls(desc, vals)

    @classmethod
    def linear(cls, root: ProjPoint) -> BiForm:
        """The linear form v*x - u*y vanishing at (u : v)."""
        return cls(root.desc, [root.v, -root.u])

    @classmethod
    def from_roots(cls, roots: Sequence[tuple[ProjPoint, int]], scale=1) -> BiForm:
        desc = roots[0][0].desc
        out = cls(desc, [scale])
        for pt, m in roots:
            out = out * cls.linear(pt) ** m
        return out

    @classmethod
    def family(cls, desc: FieldDesc, b: int, c: int, a) -> BiForm:
        """x^b y^b (x + y)^c (x + a y)^c."""
        xy = cls(desc, [0, 1, 0])
        return xy**b * cls(desc, [1, 1]) ** c * cls(desc, [1, a]) ** c

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(_elem(self.desc, r) for r in self._c)

    @property
    def array(self) -> np.ndarray:
        return self._c.copy()

    def __getitem__(self, i):
        return _elem(self.desc, self._c[i])

    def is_zero(self) -> bool:
        return not self._c.any()

    def __eq__(self, other):
        if not isinstance(other, BiForm):
            return NotImplemented
        if other.desc != self.desc:
            raise FieldMismatch(f"{self.desc} vs {other.desc}")
        return self._c.shape == other._c.shape and bool((self._c == other._c).all())

    def __hash__(self):
        return hash((self.desc, self._c.tobytes()))

    def __add__(self, other: BiForm) -> BiForm:
        if other.desc != self.desc:
            raise FieldMismatch(f"{self.desc} vs {other.desc}")
        if other.degree != self.degree:
            raise RangeError("adding forms of different degree")
        return BiForm._wrap(self.desc, (self._c + other._c) % self.desc.p)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.scale(other)
        if other.desc != self.desc:
            raise FieldMismatch(f"{self.desc} vs {other.desc}")
        d = self.desc
        return BiForm._wrap(d, mul_ext(self._c, other._c, d.p, d.modulus[: d.k] if d.modulus else None))

    __rmul__ = __mul__

    def scale(self, c) -> BiForm:
        return BiForm._wrap(self.desc, _scale_rows(self.desc, self._c, self.desc(c)))

    def __pow__(self, n: int) -> BiForm:
        result, base = BiForm(self.desc, [1]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def swap(self) -> BiForm:
        """Exchange x and y."""
        return BiForm._wrap(self.desc, self._c[::-1].copy())

    def dehomogenize(self) -> UniPoly:
        """f(x, 1) as a polynomial in x."""
        return UniPoly._wrap(self.desc, self._c[::-1].copy())

    def monomials(self):
        """Yield ((exp_x, exp_y), coefficient) for every nonzero term."""
        for i in np.flatnonzero(self._c.any(axis=1)):
            yield (self.degree - int(i), int(i)), _elem(self.desc, self._c[i])

    def to_text(self) -> str:
        if self.desc.k != 1:
            raise ValueError("text syntax only covers prime-field coefficients")
        return ",".join(str(int(v)) for v in self._c[:, 0])

    def __repr__(self):
        return f"BiForm(deg {self.degree}, {self._c.tolist()} over {self.desc})"


# --- powers modulo the monomial ideal (x^cap, y^cap) -------------------------

def _window(degree: int, cap: int) -> tuple[int, int]:
    """Index range [lo, hi) of x^(D-i) y^i with both exponents below ``cap``."""
    return max(0, degree - cap + 1), min(degree, cap - 1) + 1


class _Windowed(NamedTuple):
    degree: int
    lo: int
    arr: np.ndarray  # coefficients of indices lo .. lo + len - 1


def _truncate(degree, lo, arr, cap) -> _Windowed:
    wlo, whi = _window(degree, cap)
    if whi <= wlo:
        return _Windowed(degree, wlo, arr[:0])
    start = max(wlo, lo)
    stop = min(whi, lo + len(arr))
    if stop <= start:
        return _Windowed(degree, wlo, arr[:0])
    return _Windowed(degree, start, arr[start - lo : stop - lo])


def _wmul(g: _Windowed, h: _Windowed, desc: FieldDesc, cap: int) -> _Windowed:
    deg = g.degree + h.degree
    if len(g.arr) == 0 or len(h.arr) == 0:
        return _Windowed(deg, 0, g.arr[:0])
    prod = mul_ext(g.arr, h.arr, desc.p, desc.modulus[: desc.k] if desc.modulus else None)
    return _truncate(deg, g.lo + h.lo, prod, cap)


def _pow_window(f: BiForm, n: int, cap: int) -> _Windowed:
    """f**n with every monomial in (x^cap, y^cap) discarded after each product."""
    if cap > WINDOW_LIMIT:
        raise CapacityError(f"exponent bound {cap} exceeds {WINDOW_LIMIT}")
    desc = f.desc
    one = np.zeros((1, desc.k), dtype=np.int64)
    one[0, 0] = 1
    result = _truncate(0, 0, one, cap)
    base = _truncate(f.degree, 0, f._c, cap)
    while n:
        if n & 1:
            result = _wmul(result, base, desc, cap)
            if len(result.arr) == 0 or not result.arr.any():
                break
        n >>= 1
        if n:
            base = _wmul(base, base, desc, cap)
    return result


def _check_pow_args(f: BiForm, n: int, e: int) -> int:
    if n < 0:
        raise RangeError("N must be nonnegative")
    if e < 1:
        raise RangeError("e must be positive")
    if e * f.desc.p.bit_length() > 64 or f.desc.p**e > WINDOW_LIMIT:
        raise CapacityError(f"p^e = {f.desc.p}^{e} exceeds {WINDOW_LIMIT}")
    return f.desc.p**e


def form_pow_reduced(f: BiForm, n: int, e: int) -> BiForm:
    """Image of f**n modulo (x^(p^e), y^(p^e)) as a form of degree d*n."""
    q = _check_pow_args(f, n, e)
    total = f.degree * n
    if total + 1 > WINDOW_LIMIT:
        raise CapacityError(f"degree {total} is too large to materialise")
    w = _pow_window(f, n, q)
    out = np.zeros((total + 1, f.desc.k), dtype=np.int64)
    out[w.lo : w.lo + len(w.arr)] = w.arr
    return BiForm._wrap(f.desc, out)


def in_frobenius_ideal(f: BiForm, n: int, e: int) -> bool:
    """True iff f**n lies in (x^(p^e), y^(p^e))."""
    q = _check_pow_args(f, n, e)
    w = _pow_window(f, n, q)
    return not w.arr.any()


def central_coeff(f: BiForm, n: int) -> FieldElement:
    """Coefficient of x^(dn/2) y^(dn/2) in f**n."""
    total = f.degree * n
    if total % 2:
        raise ParityError(f"d*N = {total} is odd")
    half = total // 2
    w = _pow_window(f, n, half + 1)
    if len(w.arr) == 0:
        return f.desc.zero
    return _elem(f.desc, w.arr[half - w.lo])


class P1Roots(NamedTuple):
    field: FieldDesc
    points: list  # [(ProjPoint, multiplicity)], infinity first then by residue vector


def roots_on_p1(f: BiForm) -> P1Roots:
    """All d roots of a nonzero form on P^1, in the smallest F_{p^k} that splits it.

    For forms over a prime field the search climbs k = 1, 2, ..., d; forms over
    a proper extension must split over their own coefficient field.
    """
    if f.is_zero():
        raise DomainError("the zero form has no finite root set")
    d = f.degree
    if d > 12:
        raise CapacityError("roots_on_p1 supports degree at most 12")
    nz = np.flatnonzero(f._c.any(axis=1))
    at_inf = int(nz[0])
    g = f.dehomogenize()
    need = d - at_inf
    candidates = range(1, max(d, 1) + 1) if f.desc.k == 1 else [f.desc.k]
    for k in candidates:
        if f.desc.k == 1:
            try:
                search = make_field(f.desc.p, k)
            except RangeError as exc:
                raise CapacityError(str(exc)) from exc
        else:
            search = f.desc
        if need == 0:
            roots = []
        else:
            if search.order > ROOT_SCAN_LIMIT:
                raise CapacityError(f"splitting field {search} is beyond the scan limit")
            roots = uni_roots(g, search)
        if sum(m for _, m in roots) == need:
            points = [(ProjPoint.infinity(search), at_inf)] if at_inf else []
            points += [(ProjPoint.affine(r), m) for r, m in roots]
            return P1Roots(search, points)
    raise CapacityError(f"{f!r} does not split over the searched fields")
