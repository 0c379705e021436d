from fractions import Fraction
from math import isqrt

import pytest

from fpt_deuring import (
    BiForm,
    CapacityError,
    DomainError,
    ScanQuery,
    ScanRecord,
    classify_form,
    count_points_legendre_curve,
    deuring_eval,
    ft_formula,
    is_supersingular,
    make_field,
    report,
    scan_primes,
)
from fpt_deuring.scan import CONGRUENCE, DEGENERATE, DENOMINATOR, parse_json_report, primes_up_to

from oracles import point_count

IN_P_2 = [5, 13, 17, 29, 37, 41]
PRIMES_5_101 = [p for p in range(5, 102) if all(p % d for d in range(2, p))]


def test_sieve():
    assert primes_up_to(50) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert primes_up_to(1) == []


def test_point_count_examples():
    assert count_points_legendre_curve(2, 5) == 8
    assert count_points_legendre_curve(2, 7) == 8
    assert is_supersingular(2, 7)
    assert not is_supersingular(2, 5)
    assert not is_supersingular(-1, 13)
    assert count_points_legendre_curve(make_field(13)(12), 13) == point_count(12, 13)
    with pytest.raises(DomainError):
        count_points_legendre_curve(1, 7)
    with pytest.raises(DomainError):
        count_points_legendre_curve(2, 3)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 101])
def test_point_count_matches_enumeration_and_hasse(p):
    for lam in range(2, p):
        n = count_points_legendre_curve(lam, p)
        assert n == point_count(lam, p)
        assert (n - p - 1) ** 2 <= 4 * p


@pytest.mark.parametrize("p", PRIMES_5_101)
def test_deuring_criterion_and_ft_linkage(p):
    F = make_field(p)
    for lam in range(2, p):
        ss = is_supersingular(lam, p)
        assert ss == deuring_eval((p - 1) // 2, F(lam)).is_zero()
        v = ft_formula(classify_form(BiForm.family(F, 1, 1, F(lam))), F).value
        assert (v == Fraction(1, 2) * (1 - Fraction(1, p))) == ss


def test_scan_example_a2():
    recs = scan_primes(ScanQuery(1, 1, Fraction(2), 50), ss_check=True)
    assert [r.p for r in recs] == primes_up_to(50)
    assert [r.p for r in recs if r.in_p] == IN_P_2
    assert [r.p for r in recs if r.admissible and not r.in_p] == [3, 7, 11, 19, 23, 31, 43, 47]
    assert recs[0] == ScanRecord(2, False, None, None, False, reason=DEGENERATE)
    assert recs[1].ss_check is None  # p = 3 is not point-checked
    for r in recs:
        if r.ss_check is not None:
            assert r.ss_check == r.h_zero
            assert r.ss_check == (point_count(2, r.p) == r.p + 1)


def test_scan_congruence_filter():
    recs = scan_primes(ScanQuery(1, 2, Fraction(5), 20))
    assert [r.p for r in recs if r.admissible] == [7, 13, 19]
    # a = 5 reduces to 1 mod 2 and to 0 mod 5
    assert {r.p: r.reason for r in recs if not r.admissible} == {
        2: DEGENERATE, 3: CONGRUENCE, 5: DEGENERATE, 11: CONGRUENCE, 17: CONGRUENCE}
    for r in recs:
        if r.admissible:
            assert r.n == 2 * (r.p - 1) // 3


def test_scan_degenerate_and_denominator():
    assert all(not r.admissible and r.reason == DEGENERATE for r in scan_primes(ScanQuery(1, 1, Fraction(1), 30)))
    recs = scan_primes(ScanQuery(1, 1, Fraction(1, 3), 10))
    assert recs[1] == ScanRecord(3, False, None, None, False, reason=DENOMINATOR)


def test_scan_guards():
    with pytest.raises(CapacityError):
        scan_primes(ScanQuery(1, 1, Fraction(2), 10**6 + 1))
    with pytest.raises(DomainError):
        scan_primes(ScanQuery(1, 2, Fraction(2), 10), ss_check=True)
    with pytest.raises(DomainError):
        ScanQuery(0, 1, Fraction(2), 10)


def test_record_consistency():
    for a in (Fraction(2), Fraction(-1), Fraction(3, 7)):
        for b, c in [(1, 1), (1, 2), (2, 3)]:
            for r in scan_primes(ScanQuery(b, c, a, 300)):
                assert r.in_p == (r.admissible and not r.h_zero)


def test_report_csv():
    assert report([], "csv") == b"p,admissible,n,h_zero,in_p,ss_check\n"
    recs = scan_primes(ScanQuery(1, 1, Fraction(2), 50), ss_check=True)
    lines = report(recs, "csv").decode().split("\n")
    assert lines[-1] == "" and len(lines) == 17
    assert lines[1] == "2,false,,,false,"
    assert lines[2] == "3,true,1,true,false,"
    assert lines[3] == "5,true,2,false,true,false"
    rows = [line.split(",") for line in lines[1:-1]]
    assert [int(r[0]) for r in rows if r[4] == "true"] == IN_P_2
    assert report(list(reversed(recs)), "csv") == report(recs, "csv")


def test_report_json_round_trip():
    recs = scan_primes(ScanQuery(1, 2, Fraction(5, 2), 60))
    data = report(recs, "json")
    assert parse_json_report(data) == recs
    assert data.endswith(b"\n")
    with pytest.raises(ValueError):
        report(recs, "xml")


@pytest.mark.parametrize("a", [Fraction(2), Fraction(3), Fraction(-1)])
def test_desk_scale_evidence(a):
    counts = []
    for bound in (10**3, 10**4):
        counts.append(sum(r.in_p for r in scan_primes(ScanQuery(1, 1, a, bound))))
    assert 0 < counts[0] < counts[1]
