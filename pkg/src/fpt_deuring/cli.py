"""Command line front end: ``ft``, ``deuring``, ``scan`` and ``orbit``.

Results go to stdout as JSON (or CSV for scans); diagnostics go to stderr.
Exit codes: 0 success, 1 input or domain error, 2 no closed form available
and no oracle requested.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .deuring import (
    deuring_direct,
    deuring_eval,
    deuring_root_set,
    deuring_schur_product,
    legendre_poly,
    legendre_root_orbit,
    mobius_orbit,
)
from .errors import FptError
from .fpt import analyze
from .gf import FieldDesc, make_field
from .poly import BiForm
from .scan import ScanQuery, report, scan_primes

EXIT_OK, EXIT_INPUT, EXIT_NOT_COVERED = 0, 1, 2
DIRECT_CHECK_LIMIT = 10**4
PRINT_LIMIT = 10**6


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def parse_element(text: str, desc: FieldDesc):
    """``"5"`` is a constant; ``"[c0,c1,...]"`` is a vector in the modulus basis."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed field element {text!r}")
        body = text[1:-1].strip()
        return desc([int(t) for t in body.split(",")] if body else [])
    return desc(int(text))


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def _cmd_ft(args) -> int:
    desc = make_field(args.p, args.k)
    if args.coeffs is not None:
        if any(v is not None for v in (args.b, args.c, args.a)):
            raise ValueError("--coeffs cannot be combined with --b/--c/--a")
        f = BiForm.parse(args.coeffs, desc)
    else:
        if args.b is None or args.c is None or args.a is None:
            raise ValueError("give either --coeffs or all of --b, --c, --a")
        if args.b < 1 or args.c < 1:
            raise ValueError("--b and --c must be positive")
        a = parse_element(args.a, desc)
        if a.is_zero() or a == 1:
            raise ValueError("degenerate cross-ratio: a must avoid 0 and 1")
        f = BiForm.family(desc, args.b, args.c, a)
    result = analyze(f, args.oracle)
    sys.stdout.write(dumps(result))
    if result["ft"] is None and not args.oracle:
        return EXIT_NOT_COVERED
    return EXIT_OK


def _cmd_deuring(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be nonnegative")
    base = make_field(args.p)
    out = {"n": args.n}
    if args.print:
        if args.n > PRINT_LIMIT:
            raise ValueError(f"--print supports n <= {PRINT_LIMIT}")
        poly = deuring_schur_product(args.n, base)
        if args.n < DIRECT_CHECK_LIMIT and poly != deuring_direct(args.n, base):
            raise RuntimeError("digit product and direct construction disagree")
        out.update(poly.to_json())
    elif args.at is not None:
        desc = make_field(args.p, args.k)
        a = parse_element(args.at, desc)
        value = deuring_eval(args.n, a)
        checked = args.n < DIRECT_CHECK_LIMIT
        if checked and value != deuring_direct(args.n, base)(a):
            raise RuntimeError("digit evaluation and direct evaluation disagree")
        out.update({"at": a.to_json(), "value": value.to_json(), "direct_checked": checked})
    else:
        if args.n > PRINT_LIMIT:
            raise ValueError(f"--roots supports n <= {PRINT_LIMIT}")
        search = make_field(args.p, args.ext)
        roots = deuring_root_set(args.n, base, search)
        out.update({"field": {"p": search.p, "k": search.k}, "roots": [r.to_json() for r in roots]})
    sys.stdout.write(dumps(out))
    return EXIT_OK


def _cmd_scan(args) -> int:
    query = ScanQuery(args.b, args.c, parse_rational(args.a), args.max_prime)
    records = scan_primes(query, ss_check=args.ss_check)
    sys.stdout.write(report(records, args.format).decode())
    return EXIT_OK


def _cmd_orbit(args) -> int:
    desc = make_field(args.p, args.k)
    a = parse_element(args.a, desc)
    orbit = legendre_root_orbit(a) if args.legendre else mobius_orbit(a)
    out = {"a": a.to_json(), "kind": "legendre" if args.legendre else "mobius",
           "orbit": [x.to_json() for x in orbit]}
    if args.n is not None:
        base = make_field(args.p)
        if args.legendre:
            poly = legendre_poly(args.n, base)
            out["values"] = [poly(x).to_json() for x in orbit]
        else:
            out["values"] = [deuring_eval(args.n, x).to_json() for x in orbit]
        out["n"] = args.n
    sys.stdout.write(dumps(out))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); exit 2 is reserved for "not covered"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fpt-deuring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ft = sub.add_parser("ft", help="F-pure threshold of a binary form")
    ft.add_argument("--p", type=int, required=True)
    ft.add_argument("--k", type=int, default=1)
    ft.add_argument("--coeffs", help='"c0,...,cd": c0 x^d + c1 x^(d-1) y + ... + cd y^d')
    ft.add_argument("--b", type=int)
    ft.add_argument("--c", type=int)
    ft.add_argument("--a", help="cross-ratio: int or [c0,c1,...]")
    ft.add_argument("--oracle", type=int, metavar="E_MAX", help="append nu_e brackets for e <= E_MAX")
    ft.set_defaults(func=_cmd_ft)

    de = sub.add_parser("deuring", help="Deuring polynomial H{n} mod p")
    de.add_argument("--p", type=int, required=True)
    de.add_argument("--n", type=int, required=True)
    de.add_argument("--k", type=int, default=1, help="field of the --at point")
    mode = de.add_mutually_exclusive_group(required=True)
    mode.add_argument("--print", action="store_true")
    mode.add_argument("--at")
    mode.add_argument("--roots", action="store_true")
    de.add_argument("--ext", type=int, default=1, help="extension degree searched by --roots")
    de.set_defaults(func=_cmd_deuring)

    sc = sub.add_parser("scan", help="sweep primes for membership in P")
    sc.add_argument("--b", type=int, required=True)
    sc.add_argument("--c", type=int, required=True)
    sc.add_argument("--a", required=True, help="rational cross-ratio, e.g. 2 or 1/3")
    sc.add_argument("--max-prime", type=int, required=True)
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.add_argument("--ss-check", action="store_true")
    sc.set_defaults(func=_cmd_scan)

    orb = sub.add_parser("orbit", help="cross-ratio or Legendre root orbit")
    orb.add_argument("--p", type=int, required=True)
    orb.add_argument("--k", type=int, default=1)
    orb.add_argument("--a", required=True)
    orb.add_argument("--n", type=int)
    orb.add_argument("--legendre", action="store_true")
    orb.set_defaults(func=_cmd_orbit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FptError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
