"""Deuring polynomials mod p: digit factorisation, symmetry and the ODE.

Run with ``python demos/deuring_identities.py``.
"""

from fpt_deuring import (
    UniPoly,
    deuring_direct,
    deuring_eval,
    deuring_schur_product,
    legendre_poly,
    make_field,
    p_digits,
)

p = 7
F = make_field(p)

# the coefficients C(n, i)^2 mod p read the same in both directions
for n in range(5):
    print(f"H{{{n}}} mod {p}:", deuring_direct(n, F).ints())

# At n = p - 1 the polynomial collapses to a single power of (l - 1)
print("H{p-1} == (l-1)^(p-1):", deuring_direct(p - 1, F) == UniPoly(F, [-1, 1]) ** (p - 1))

# The digit product reproduces H{n} for any n
n = 300
print(f"digits of {n} in base {p}:", p_digits(n, p))
print("digit product matches:", deuring_schur_product(n, F) == deuring_direct(n, F))

# which makes huge indices cheap to evaluate
print("H{10^18 + 9}(3) mod 7 =", deuring_eval(10**18 + 9, F(3)))

# the differential operator annihilating H{n}
l = UniPoly(F, [0, 1])
H = deuring_direct(3, F)
ode = l * (l - 1) * H.derivative().derivative() + (l * (1 - 2 * 3) - 1) * H.derivative() + H * 9
print("ODE residual for n = 3:", ode.ints())

# and the link with Legendre polynomials, checked at every admissible point
P = legendre_poly(3, F)
ok = all((1 - F(a)) ** 3 * P((1 + F(a)) / (1 - F(a))) == H(F(a)) for a in range(p) if a != 1)
print("H{3}(l) == (1-l)^3 P_3((1+l)/(1-l)) on F_7:", ok)
