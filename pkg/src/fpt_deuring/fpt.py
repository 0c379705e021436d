"""F-pure thresholds of binary forms.

Two independent routes:

* closed forms (``classify_form`` + ``ft_formula``) that read the threshold
  off the root multiplicities and, for four-point supports, off whether the
  cross-ratio is a root of the relevant Deuring polynomial;
* the definition itself (``nu`` / ``ft_bracket``): the largest N with
  f^N outside (x^(p^e), y^(p^e)), found by binary search on membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .deuring import deuring_eval
from .errors import CapacityError, DomainError
from .gf import FieldDesc, FieldElement, make_field
from .poly import BiForm, ProjPoint, in_frobenius_ideal, roots_on_p1

ORACLE_LIMIT = 10**6

MAIN_GENERIC = "MainThm-generic"
MAIN_SUPERSINGULAR = "MainThm-supersingular"
TWO_GENERIC = "ThmTwo-generic"
TWO_ROOT = "ThmTwo-root"
P2_CASE = "P2-case"
MONOMIAL = "Monomial"
BINOMIAL = "Binomial-x2yxy"


@dataclass(frozen=True)
class FormClass:
    """Root multiplicity pattern of a form, plus the cross-ratio for four-point supports.

    For the x^b y^b (x+y)^c (x+ay)^c family (two pairs of equal multiplicity)
    the pattern is written [b, b, c, c] with b <= c and the b-pair placed at
    the front of ``points``; every other pattern is sorted in decreasing order.
    """

    pattern: tuple[int, ...]
    cross_ratio: FieldElement | None = None
    b: int | None = None
    c: int | None = None
    points: tuple = field(default=(), repr=False, compare=False)

    @property
    def degree(self) -> int:
        return sum(self.pattern)

    @property
    def is_family(self) -> bool:
        return self.b is not None


@dataclass(frozen=True)
class FptValue:
    value: Fraction
    provenance: str

    def to_json(self) -> dict:
        return {"num": str(self.value.numerator), "den": str(self.value.denominator),
                "provenance": self.provenance}


@dataclass(frozen=True)
class NuRecord:
    e: int
    nu: int
    ratio: Fraction

    def to_json(self) -> dict:
        return {"e": self.e, "nu": str(self.nu),
                "ratio": [str(self.ratio.numerator), str(self.ratio.denominator)]}


@dataclass(frozen=True)
class Bracket:
    records: list[NuRecord]
    lower: Fraction
    upper: Fraction

    def contains(self, value: Fraction) -> bool:
        """nu/p^e < value <= (nu+1)/p^e at the deepest level."""
        return self.lower < value <= self.upper


def cross_ratio(z1: ProjPoint, z2: ProjPoint, z3: ProjPoint, z4: ProjPoint) -> FieldElement:
    """(z4 - z1)(z3 - z2) / ((z4 - z2)(z3 - z1)), via 2x2 determinants."""
    def det(s, t):
        return s.u * t.v - t.u * s.v

    pts = (z1, z2, z3, z4)
    for i in range(4):
        for j in range(i + 1, 4):
            if det(pts[i], pts[j]).is_zero():
                raise DomainError("cross-ratio needs four distinct points")
    return det(z4, z1) * det(z3, z2) / (det(z4, z2) * det(z3, z1))


def _descend(a: FieldElement) -> FieldElement:
    if a.desc.k > 1 and a.in_prime_field():
        return make_field(a.desc.p)(a.rep[0])
    return a


def classify_form(f: BiForm) -> FormClass:
    if f.is_zero() or f.degree < 1:
        raise DomainError("classification needs a nonzero form of positive degree")
    roots = roots_on_p1(f)
    pts = sorted(roots.points, key=lambda t: t[0].key)
    mults = [m for _, m in pts]
    if len(pts) != 4:
        return FormClass(tuple(sorted(mults, reverse=True)), points=tuple(pts))
    counts = sorted(set(mults))
    if len(counts) == 1 or (len(counts) == 2 and mults.count(counts[0]) == 2):
        b, c = counts[0], counts[-1]
        ordered = [t for t in pts if t[1] == b] + ([t for t in pts if t[1] == c] if b != c else [])
        a = _descend(cross_ratio(*(pt for pt, _ in ordered)))
        return FormClass((b, b, c, c), a, b, c, tuple(ordered))
    a = _descend(cross_ratio(*(pt for pt, _ in pts)))
    return FormClass(tuple(sorted(mults, reverse=True)), a, points=tuple(pts))


def ft_formula(cls: FormClass, desc: FieldDesc) -> FptValue | None:
    """Closed-form threshold, or None where no formula applies."""
    p = desc.p
    pat = cls.pattern
    if len(pat) <= 2:
        return FptValue(Fraction(1, max(pat)), MONOMIAL)
    if pat == (2, 1, 1):
        return FptValue(Fraction(1, 2), BINOMIAL)
    if not cls.is_family:
        return None
    b, c, a = cls.b, cls.c, cls.cross_ratio
    s = b + c
    if b == c == 1:
        if p == 2:
            return FptValue(Fraction(1, 2), P2_CASE)
        if deuring_eval((p - 1) // 2, a).is_zero():
            return FptValue(Fraction(1, 2) * (1 - Fraction(1, p)), MAIN_SUPERSINGULAR)
        return FptValue(Fraction(1, 2), MAIN_GENERIC)
    if (p - 1) % s:
        return None
    if deuring_eval(c * (p - 1) // s, a).is_zero():
        return FptValue(Fraction(1, s) * (1 - Fraction(1, p)), TWO_ROOT)
    return FptValue(Fraction(1, s), TWO_GENERIC)


def lct_value(cls: FormClass) -> Fraction | None:
    if not cls.is_family:
        return None
    return Fraction(1, cls.b + cls.c)


def nu(f: BiForm, e: int) -> NuRecord:
    """Largest N with f^N not in (x^(p^e), y^(p^e))."""
    if e < 1:
        raise DomainError("e must be positive")
    p = f.desc.p
    if e * p.bit_length() > 64 or p**e > ORACLE_LIMIT:
        raise CapacityError(f"p^e = {p}^{e} exceeds the oracle limit {ORACLE_LIMIT}")
    q = p**e
    if f.degree == 0 and not f.is_zero():
        raise DomainError("a nonzero constant never enters the ideal")
    # membership is monotone in N, and f^q is always a member for deg f >= 1
    lo, hi = 0, q
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if in_frobenius_ideal(f, mid, e):
            hi = mid
        else:
            lo = mid
    return NuRecord(e, lo, Fraction(lo, q))


def ft_bracket(f: BiForm, e_max: int) -> Bracket:
    """nu_e for e = 1..e_max and the final interval [nu/p^e, (nu+1)/p^e]."""
    if e_max < 1:
        raise DomainError("e_max must be positive")
    records = [nu(f, e) for e in range(1, e_max + 1)]
    last = records[-1]
    q = f.desc.p**last.e
    return Bracket(records, last.ratio, Fraction(last.nu + 1, q))


def analyze(f: BiForm, oracle: int | None = None) -> dict:
    """The JSON result object: pattern, cross-ratio, formula value, brackets, lct."""
    cls = classify_form(f)
    ft = ft_formula(cls, f.desc)
    brackets = ft_bracket(f, oracle).records if oracle else []
    lct = lct_value(cls)
    return {
        "pattern": list(cls.pattern),
        "crossRatio": cls.cross_ratio.to_json() if cls.cross_ratio is not None else None,
        "ft": ft.to_json() if ft else None,
        "brackets": [r.to_json() for r in brackets],
        "lct": {"num": str(lct.numerator), "den": str(lct.denominator)} if lct is not None else None,
    }
