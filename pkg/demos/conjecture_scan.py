"""How often is FT equal to the log canonical threshold?

Counts primes where the threshold of x^b y^b (x+y)^c (x+ay)^c equals 1/(b+c),
and for b = c = 1 checks each verdict by counting points on the Legendre curve.
"""

from fractions import Fraction

from fpt_deuring import ScanQuery, report, scan_primes

recs = scan_primes(ScanQuery(1, 1, Fraction(2), 50), ss_check=True)
print(report(recs).decode())

for b, c, a in [(1, 1, 2), (1, 1, 3), (1, 1, -1), (1, 2, 5), (2, 3, 3)]:
    counts = []
    for bound in (10**2, 10**3, 10**4):
        records = scan_primes(ScanQuery(b, c, Fraction(a), bound))
        admissible = sum(r.admissible for r in records)
        counts.append(f"{sum(r.in_p for r in records)}/{admissible}")
    print(f"b={b} c={c} a={a:2d}: in P / admissible up to 1e2, 1e3, 1e4 -> {', '.join(counts)}")
