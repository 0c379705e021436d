"""Root sets of H{(p-1)/2} are unions of cross-ratio orbits.

Permuting the four roots of xy(x+y)(x+ay) moves a around its six-element
orbit without changing the threshold, so the supersingular parameters must
be closed under that action. The same holds for the Legendre roots.
"""

from fpt_deuring import (
    deuring_root_set,
    legendre_poly,
    legendre_root_orbit,
    make_field,
    mobius_orbit,
    uni_roots,
)

for p in (7, 11, 13):
    F, F2 = make_field(p), make_field(p, 2)
    n = (p - 1) // 2
    roots = deuring_root_set(n, F, F2)
    seen, orbits = set(), []
    for r in roots:
        if r.key not in seen:
            orb = mobius_orbit(r)
            seen |= {v.key for v in orb}
            orbits.append([v.rep for v in orb])
    print(f"p={p}: {len(roots)} supersingular parameters in F_{p * p}, orbits:")
    for orb in orbits:
        print("   ", orb)

    lroots = [r for r, _ in uni_roots(legendre_poly(n, F), F2)]
    keys = {r.key for r in lroots}
    closed = all({v.key for v in legendre_root_orbit(r)} <= keys for r in lroots)
    print(f"   Legendre P_{n} roots: {len(lroots)}, closed under +-b orbit: {closed}")
