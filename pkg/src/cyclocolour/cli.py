"""Command line entry point: classify, enumerate, table, verify, render.

Exit codes: 0 ok, 2 domain error, 3 parse error, 4 invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from .ideals import NotClassNumberOne, principal_ideal
from .render import Window, ab_patch, lattice_patch, render_patch
from .ring import CLASS_NUMBER_ONE, cyclotomic_ring
from .splitting import DEFAULT_SEED, classify_norm, norm_table
from .symmetry import brute_force_verify, classify, colour_stabiliser, is_perfect, point_group

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_INVARIANT = 0, 2, 3, 4


class DomainError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _ring(n: int):
    if n not in CLASS_NUMBER_ONE:
        raise DomainError(
            f"n = {n}: class number one required "
            f"(n must be one of {', '.join(map(str, CLASS_NUMBER_ONE))})"
        )
    return cyclotomic_ring(n)


def _element(ring, text: str):
    try:
        z = ring.parse(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if not z:
        raise DomainError("q must be nonzero")
    return z


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_classify(args) -> int:
    ring = _ring(args.n)
    q = _element(ring, args.q)
    _dump(classify(principal_ideal(q)).to_json())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _ring(args.n)
    if args.colours < 1:
        raise DomainError("number of colours must be positive")
    j, reports = classify_norm(args.n, args.colours, args.seed)
    _dump({"n": args.n, "colours": args.colours, "j": j, "reports": [r.to_json() for r in reports]})
    return EXIT_OK


def format_table(rows) -> str:
    out = [f"{'n':>3} {'l':>5} {'j':>3}  {'H':<3} K"]
    for r in rows:
        out.append(f"{r.n:>3} {r.norm:>5} {r.count:>3}  {r.H:<3} {r.K}")
    return "\n".join(out)


def cmd_table(args) -> int:
    _ring(args.n)
    rows = norm_table(args.n, args.lmax, seed=args.seed)
    if args.json:
        _dump([
            {"n": r.n, "l": r.norm, "j": r.count, "H": r.H, "K": r.K} for r in rows
        ])
    else:
        print(format_table(rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    ring = _ring(args.n)
    I = principal_ideal(_element(ring, args.q))
    if args.bound < 0:
        raise DomainError("bound must be nonnegative")
    perfect = is_perfect(I)
    S = colour_stabiliser(I)
    contradictions = conclusive = 0
    for g in point_group(ring):
        in_H = perfect or not g.is_reflection
        in_S = S.contains(g)
        v = brute_force_verify(I, g, 0, args.bound)
        # a finite patch can refute membership but never prove it
        bad = (in_H and not v.consistent) or (in_S and not v.identity)
        agree = in_H == v.consistent and in_S == v.identity
        contradictions += bad
        conclusive += agree
        status = "agree" if agree else ("CONTRADICTION" if bad else "inconclusive")
        print(f"{g.label():>8}  classifier: H={int(in_H)} S={int(in_S)}  "
              f"patch: consistent={int(v.consistent)} identity={int(v.identity)}  {status}")
    total = 2 * ring.point_order
    verdict = "PASS" if not contradictions else "FAIL"
    print(f"{verdict}: {conclusive}/{total} isometries agree exactly, "
          f"{contradictions} contradictions, patch of {(2 * args.bound + 1) ** ring.degree} points")
    return EXIT_OK if not contradictions else EXIT_INVARIANT


def cmd_render(args) -> int:
    ring = _ring(args.n)
    I = principal_ideal(_element(ring, args.q))
    if args.radius < 0:
        raise DomainError("radius must be nonnegative")
    if args.mode == "lattice":
        if args.n not in (3, 4):
            raise DomainError("lattice mode needs n = 3 or n = 4")
        patch = lattice_patch(I, args.radius)
    else:
        if args.n != 8:
            raise DomainError("ab mode needs n = 8")
        window = Window(args.rho) if args.rho is not None else Window()
        patch = ab_patch(I, args.radius, window)
    render_patch(patch, args.out)
    print(f"wrote {len(patch.points)} points in {len(patch.colours)} colours to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclocolour", description="Ideal colourings of cyclotomic integers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, q=True):
        sp.add_argument("--n", type=int, required=True)
        if q:
            sp.add_argument("--q", required=True, help="coefficients, lowest degree first, e.g. 1,1,1,1")
        sp.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)

    sp = sub.add_parser("classify", help="classify the colouring induced by (q)")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="all colourings with a given number of colours")
    common(sp, q=False)
    sp.add_argument("--colours", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("table", help="H and K for every number of colours up to lmax")
    common(sp, q=False)
    sp.add_argument("--lmax", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="compare the classifier with a brute-force patch check")
    common(sp)
    sp.add_argument("--bound", type=int, default=3)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="write an SVG of a coloured patch")
    common(sp)
    sp.add_argument("--mode", choices=("lattice", "ab"), required=True)
    sp.add_argument("--radius", type=float, default=10.0)
    sp.add_argument("--out", required=True)
    sp.add_argument("--rho", type=float, default=None, help="window circumradius for ab mode")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, NotClassNumberOne) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
