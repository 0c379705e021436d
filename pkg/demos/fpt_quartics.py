"""F-pure thresholds of quartics xy(x+y)(x+ay): closed form against the definition.

For each prime the closed form is either 1/2 or (1/2)(1 - 1/p), the latter
exactly when a is a root of H{(p-1)/2}. The nu_e oracle brackets the value
from below by brute force.
"""

from fractions import Fraction

from fpt_deuring import BiForm, classify_form, ft_bracket, ft_formula, make_field

for p in (3, 5, 7, 11):
    F = make_field(p)
    for a in range(2, p):
        f = BiForm.family(F, 1, 1, F(a))
        v = ft_formula(classify_form(f), F)
        br = ft_bracket(f, 3 if p < 11 else 2)
        nus = [r.nu for r in br.records]
        print(f"p={p:2d} a={a:2d}  FT={str(v.value):5s} {v.provenance:22s} nu={nus}  "
              f"bracket=({br.lower}, {br.upper}]  ok={br.contains(v.value)}")

# the remaining normal forms
F = make_field(5)
x, y = BiForm(F, [1, 0]), BiForm(F, [0, 1])
for name, f in [("x^4", x**4), ("x^3 y", x**3 * y), ("x^2 y^2", x**2 * y**2), ("x^2 y (x+y)", x**2 * y * (x + y))]:
    v = ft_formula(classify_form(f), F)
    print(f"{name:12s} FT = {v.value}  ({v.provenance})")

# a generalised member: x^2 y^2 (x+y)^3 (x+3y)^3 over F_11, where 11 = 1 mod 5
F = make_field(11)
cls = classify_form(BiForm.family(F, 2, 3, F(3)))
print("pattern", cls.pattern, "cross-ratio", cls.cross_ratio, "FT", ft_formula(cls, F).value,
      "lct", Fraction(1, cls.b + cls.c))
