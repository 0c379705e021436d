"""Acceptance gate: one test per criterion, each with its runtime budget.

The terminal summary prints a [PASS]/[FAIL] line per criterion (see conftest).
All checks are exact; the runtime budget is asserted inside each test.
"""

import random
import time
from fractions import Fraction
from math import comb
from pathlib import Path

from fpt_deuring import (
    BiForm,
    UniPoly,
    antiderivative_F,
    central_coeff,
    classify_form,
    deuring_direct,
    deuring_eval,
    deuring_root_set,
    deuring_schur_product,
    ft_formula,
    gcd,
    in_frobenius_ideal,
    is_supersingular,
    legendre_poly,
    legendre_root_orbit,
    make_field,
    mobius_orbit,
    nu,
    uni_roots,
)
from fpt_deuring.cli import main
from fpt_deuring.deuring import deuring_direct_many

from oracles import nu_linear, point_count

GOLDEN = Path(__file__).parent / "golden"


def primes_between(lo, hi):
    return [p for p in range(max(lo, 2), hi + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]


def bracket_ok(f, v, cap):
    p = f.desc.p
    e = 1
    while p**e <= cap:
        r = nu(f, e)
        if not Fraction(r.nu, p**e) < v <= Fraction(r.nu + 1, p**e):
            return False
        e += 1
    return e > 1


def test_c1_deuring_identities(criterion):
    criterion("C1 Deuring identity suite (< 10 s)")
    t0 = time.perf_counter()
    rng = random.Random(2024)
    for p in [3, 5, 7, 11, 13, 17, 19, 23]:
        F = make_field(p)
        l = UniPoly(F, [0, 1])
        one = UniPoly(F, [1])
        assert deuring_direct(p - 1, F) == UniPoly(F, [-1, 1]) ** (p - 1)
        for n, H in deuring_direct_many(rng.sample(range(5001), 500), F):
            assert deuring_schur_product(n, F) == H
        prev = None
        for n in range(p):
            H = deuring_direct(n, F)
            c = H.ints()
            assert len(c) == n + 1 and c == c[::-1]
            d1 = H.derivative()
            assert (l * (l - 1) * d1.derivative() + (l * (1 - 2 * n) - 1) * d1 + H * (n * n)).is_zero()
            assert H(F(0)) == 1 and H(F(1)) == comb(2 * n, n) % p
            if 2 * n < p:
                G = antiderivative_F(n, F)
                g1 = G.derivative()
                assert g1 == H
                assert (l * (l - 1) * g1.derivative() - l * (1 + 2 * n) * g1 + G * ((n + 1) ** 2)).is_zero()
                assert H(F(1)) != 0
                if n > 0:
                    assert gcd(H, d1) == one and gcd(H, prev) == one
            prev = H
        H = deuring_direct((p - 1) // 2, F)
        assert (l * (l - 1) * H.derivative().derivative() * 4 + (l * 2 - 1) * H.derivative() * 4 + H).is_zero()
    assert time.perf_counter() - t0 < 10


def test_c2_central_coefficient_bridge(criterion):
    criterion("C2 central coefficient = Deuring value (< 5 s)")
    t0 = time.perf_counter()
    for p in [3, 5, 7, 11, 13]:
        F = make_field(p)
        for lam in range(p):
            f = BiForm(F, [1, 1 + lam, lam])  # (x + y)(x + lam y)
            for n in range(26):
                assert central_coeff(f, n) == deuring_eval(n, F(lam))
    assert time.perf_counter() - t0 < 5


def test_c3_theorem_vs_oracle(criterion):
    criterion("C3 main theorem vs nu_e oracle (< 60 s)")
    t0 = time.perf_counter()
    for p in [3, 5, 7, 11, 13]:
        F = make_field(p)
        n = (p - 1) // 2
        for a in range(2, p):
            f = BiForm.family(F, 1, 1, F(a))
            v = ft_formula(classify_form(f), F).value
            assert bracket_ok(f, v, 10**5)
            if deuring_eval(n, F(a)).is_zero():
                assert in_frobenius_ideal(f, (p - 1) // 2, 1)
            else:
                e = 1
                while p**e <= 10**5:
                    assert not in_frobenius_ideal(f, (p**e - 1) // 2, e)
                    e += 1
    assert time.perf_counter() - t0 < 60


def test_c4_generalized_family(criterion):
    criterion("C4 generalized family and reciprocal pairing (< 120 s)")
    t0 = time.perf_counter()
    for b, c in [(1, 2), (1, 3), (2, 3)]:
        s = b + c
        for p in [p for p in primes_between(2, 200) if p % s == 1][:3]:
            F, F2 = make_field(p), make_field(p, 2)
            for a in range(2, p):
                f = BiForm.family(F, b, c, F(a))
                cls = classify_form(f)
                assert (cls.b, cls.c) == (b, c)
                assert bracket_ok(f, ft_formula(cls, F).value, 10**5)
            one = F2.one.key
            zb = {r.key for r in deuring_root_set(b * (p - 1) // s, F, F2)} - {one}
            zc = {r.key for r in deuring_root_set(c * (p - 1) // s, F, F2)} - {one}
            assert zb == zc
    assert time.perf_counter() - t0 < 120


def test_c5_supersingularity_cross_oracle(criterion):
    criterion("C5 point count vs Deuring vs formula, 5 <= p <= 101 (< 60 s)")
    t0 = time.perf_counter()
    for p in primes_between(5, 101):
        F = make_field(p)
        drop = Fraction(1, 2) * (1 - Fraction(1, p))
        for lam in range(2, p):
            ss = is_supersingular(lam, p)
            assert ss == (point_count(lam, p) == p + 1)
            assert ss == deuring_eval((p - 1) // 2, F(lam)).is_zero()
            v = ft_formula(classify_form(BiForm.family(F, 1, 1, F(lam))), F).value
            assert ss == (v == drop)
    assert time.perf_counter() - t0 < 60


def test_c6_orbit_closure(criterion):
    criterion("C6 orbit closure of Deuring and Legendre roots, p <= 101 (< 30 s)")
    t0 = time.perf_counter()
    for p in primes_between(3, 101):
        F, F2 = make_field(p), make_field(p, 2)
        n = (p - 1) // 2
        roots = {r.key for r in deuring_root_set(n, F, F2)}
        assert len(roots) == n  # all supersingular parameters lie in F_{p^2}
        for r in deuring_root_set(n, F, F2):
            assert {b.key for b in mobius_orbit(r)} <= roots
        lroots = [r for r, _ in uni_roots(legendre_poly(n, F), F2)]
        keys = {r.key for r in lroots}
        for r in lroots:
            assert {b.key for b in legendre_root_orbit(r)} <= keys
    assert time.perf_counter() - t0 < 30


# frozen from the brute-force oracle (oracles.nu_linear) and the closed forms
GOLDEN_VALUES = [
    (3, [0, 1, 0, 2, 0], Fraction(1, 3)),  # xy(x+y)(x+2y) at p = 3
    (5, [0, 1, 3, 2, 0], Fraction(1, 2)),  # same form at p = 5
    (7, [0, 1, 3, 2, 0], Fraction(3, 7)),  # same form at p = 7
    (5, [0, 1, 0, 0, 0], Fraction(1, 3)),  # x^3 y
    (5, [0, 1, 1, 0, 0], Fraction(1, 2)),  # x^2 y (x + y)
]


def test_c7_known_values(criterion):
    criterion("C7 pinned values")
    for p, coeffs, expected in GOLDEN_VALUES:
        f = BiForm(make_field(p), coeffs)
        assert ft_formula(classify_form(f), f.desc).value == expected
        for e in (1, 2, 3):
            if p**e > 400:
                break
            v = nu_linear(coeffs, p, e)
            assert Fraction(v, p**e) < expected <= Fraction(v + 1, p**e)
    assert nu(BiForm(make_field(3), [0, 1, 0, 2, 0]), 2).nu == 2 == nu_linear([0, 1, 0, 2, 0], 3, 2)
    for p in (2, 3, 7, 11):
        assert ft_formula(classify_form(BiForm(make_field(p), [0, 1, 0, 0, 0])), make_field(p)).value == Fraction(1, 3)


def test_c8_scan_golden(criterion, capsys):
    criterion("C8 scan golden CSV")
    argv = ["scan", "--b", "1", "--c", "1", "--a", "2", "--max-prime", "50", "--ss-check"]
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out.encode())
    golden = (GOLDEN / "scan_b1_c1_a2_50_ss.csv").read_bytes()
    assert outputs[0] == outputs[1] == golden
    rows = [line.split(",") for line in golden.decode().splitlines()[1:]]
    assert len(rows) == 15
    assert [int(r[0]) for r in rows if r[4] == "true"] == [5, 13, 17, 29, 37, 41]
    for r in rows:
        p = int(r[0])
        if p >= 5:
            assert (r[4] == "true") == (point_count(2, p) != p + 1)
