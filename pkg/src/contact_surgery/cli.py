"""Command-line front end.

Output is deterministic: fractions are always written ``num/den`` and
errors go to stderr as a single ``error: ...`` line.  Exit status is 0 on
success, 1 when a verification fails and 2 for usage, parse or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import catalog
from .diagram import MarkedDiagram, homology, reverse_orientation
from .diagram_io import format_diagram, load_diagram
from .errors import SurgeryError
from .invariants import a0_crosscheck, classical_invariants, d3
from .torus import Slope, complement_slope, neg_cfe, normalize_slope, tight_count

SUITES = ("s3", "rp3", "lp1", "l52", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fr(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _load(path: str):
    try:
        return load_diagram(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_marked(path: str) -> MarkedDiagram:
    obj = _load(path)
    if not isinstance(obj, MarkedDiagram):
        raise UsageError(f"{path}: no marked knot (add a 'marked tb=... rot=...' line)")
    return obj


def _h1_string(factors) -> str:
    if not factors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


def cmd_invariants(args, out) -> int:
    md = _load_marked(args.file)
    inv = classical_invariants(md)
    rev = classical_invariants(reverse_orientation(md))
    print(
        f"tb_q = {fr(inv.tb_q)}, rot_q = {fr(inv.rot_q)} | {fr(rev.rot_q)}, "
        f"r = {inv.order_r}, |H1| = {inv.h1_order}",
        file=out,
    )
    a0 = a0_crosscheck(md)
    print(f"a0 = {a0}, cross-check ok", file=out)
    return 0


def cmd_d3(args, out) -> int:
    obj = _load(args.file)
    rep = d3(obj)
    print(f"d3 = {fr(rep.d3)}", file=out)
    print(f"c^2 = {fr(rep.c_squared)}, sigma = {rep.sigma}, chi = {rep.chi}, q = {rep.q_plus}", file=out)
    return 0


def cmd_homology(args, out) -> int:
    obj = _load(args.file)
    rep = homology(obj)
    print(f"H1 = {_h1_string(rep.h1_invariant_factors)}", file=out)
    if rep.is_qhs:
        print(f"|H1| = {rep.h1_order}", file=out)
        if rep.order_r is not None:
            print(f"r = {rep.order_r}", file=out)
    else:
        print("|H1| = infinite", file=out)
    return 0


def cmd_catalog(args, out) -> int:
    if args.list or args.family is None:
        for name in catalog.BUILDABLE:
            params = " ".join(f"--{p} N" for p in catalog.FAMILY_PARAMS[name])
            print(f"{name} {params}".rstrip(), file=out)
        return 0
    names = catalog.FAMILY_PARAMS.get(args.family)
    if names is None:
        raise UsageError(f"unknown family {args.family!r}; see 'catalog --list'")
    given = {k: getattr(args, k) for k in ("p", "k", "n", "j") if getattr(args, k) is not None}
    missing = [k for k in names if k not in given]
    extra = [k for k in given if k not in names]
    if missing or extra:
        raise UsageError(f"{args.family} takes {' '.join('--' + k for k in names) or 'no parameters'}")
    out.write(format_diagram(catalog.build(catalog.family(args.family, **given))))
    return 0


def _print_cfe(slope: Slope, out) -> None:
    cfe, k = normalize_slope(slope)
    print(f"slope = {slope}", file=out)
    print(f"normalized = {fr(cfe.value)} (twist k = {k})", file=out)
    print(f"cfe = {cfe}", file=out)
    print(f"count = {tight_count(cfe)}", file=out)


def cmd_count(args, out) -> int:
    if args.slope is not None:
        if args.space is not None or args.n is not None:
            raise UsageError("--slope excludes --space/--n")
        try:
            slope = Slope.of(args.slope)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"invalid slope {args.slope!r}") from None
        if not slope.is_infinite and slope.value <= -1:
            cfe = neg_cfe(slope)
            print(f"slope = {slope}", file=out)
            print(f"cfe = {cfe}", file=out)
            print(f"count = {tight_count(cfe)}", file=out)
            return 0
        _print_cfe(slope, out)
        return 0
    if args.space is None or args.n is None:
        raise UsageError("count needs --slope, or --space and --n")
    if args.space == "lp1" and args.p is None:
        raise UsageError("--space lp1 needs --p")
    g = catalog.gluing_for(args.space, args.p)
    tb, s2 = complement_slope(g, args.n)
    print(f"tb_q = {fr(tb)}", file=out)
    _print_cfe(s2, out)
    return 0


def _suite_runs(args) -> list[tuple[str, int | None]]:
    if args.suite == "lp1":
        if args.p is None:
            raise UsageError("--suite lp1 needs --p")
        return [("lp1", args.p)]
    if args.suite == "l52":
        return [("l52_k1", None), ("l52_k2", None)]
    if args.suite == "all":
        ps = [args.p] if args.p is not None else list(range(2, 6))
        return [("s3", None), ("rp3", None)] + [("lp1", p) for p in ps] + [("l52_k1", None), ("l52_k2", None)]
    return [(args.suite, None)]


def cmd_verify(args, out) -> int:
    nmin = -args.nmax if args.nmin is None else args.nmin
    if nmin > args.nmax:
        raise UsageError("--nmin exceeds --nmax")
    ok = True
    for space, p in _suite_runs(args):
        report = catalog.verify_classification(space, range(nmin, args.nmax + 1), p)
        groups = list(report.family_rows) + ["classification"]
        for group in groups:
            bad = [m for m in report.mismatches if m.group == group]
            rows = report.family_rows.get(group)
            detail = f"{rows} rows" if rows is not None else f"n={nmin}..{args.nmax}"
            print(f"{'FAIL' if bad else 'PASS'} {report.label} {group} ({detail})", file=out)
            for m in bad:
                print(f"  {m}", file=out)
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} {report.label}: {len(report.families)} families, "
            f"{report.rows_checked} invariant rows checked",
            file=out,
        )
        ok = ok and report.passed
    return 0 if ok else 1


def _rot_str(row: catalog.ExpectedRow) -> str:
    if row.signed and row.rot_q != 0:
        return "+-" + fr(abs(row.rot_q))
    return fr(row.rot_q)


def cmd_tables(args, out) -> int:
    if args.space == "lp1" and args.p is None:
        raise UsageError("--space lp1 needs --p")
    if args.counts:
        g = catalog.gluing_for(args.space, args.p)
        print("n\ttb_q\ts2\tcfe\tcount", file=out)
        for n in range(args.nmin, args.nmax + 1):
            tb, s2 = complement_slope(g, n)
            try:
                cfe, _ = normalize_slope(s2)
                cells = (str(cfe), str(tight_count(cfe)))
            except SurgeryError:
                cells = ("-", "0")
            print(f"{n}\t{fr(tb)}\t{s2}\t" + "\t".join(cells), file=out)
        return 0
    print("family\ttb_q\trot_q\td3", file=out)
    for row in catalog.expected_table(args.space, p=args.p, nmax=args.nmax, nmin=args.nmin):
        d3_cell = "-" if row.d3 is None else fr(row.d3)
        print(f"{row.family}\t{fr(row.tb_q)}\t{_rot_str(row)}\t{d3_cell}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contact-surgery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb, func, text in (
        ("invariants", cmd_invariants, "tb_q, rot_q, order and a0 of the marked knot"),
        ("d3", cmd_d3, "d3 invariant of the surgered contact structure"),
        ("homology", cmd_homology, "H_1 of the surgered manifold"),
    ):
        sp = sub.add_parser(verb, help=text)
        sp.add_argument("file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("catalog", help="write a catalog family as a diagram file")
    sp.add_argument("family", nargs="?")
    sp.add_argument("--list", action="store_true")
    for name in ("p", "k", "n", "j"):
        sp.add_argument(f"--{name}", type=int)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("count", help="tight structures on a solid torus")
    sp.add_argument("--slope")
    sp.add_argument("--space", choices=catalog.SPACES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--p", type=int)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("verify", help="check the classification tables")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--nmin", type=int)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="print expected invariant or count tables")
    sp.add_argument("--space", choices=catalog.SPACES, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--nmax", type=int, default=10)
    sp.add_argument("--nmin", type=int, default=0)
    sp.add_argument("--counts", action="store_true")
    sp.set_defaults(func=cmd_tables)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-5/2" for an option; glue it to its flag
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--slope":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        return args.func(args, out)
    except (UsageError, SurgeryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
