"""Command-line driver: ``conjucode factor|analyze|verify|search``."""

from __future__ import annotations

import argparse
import sys

from .acc import acc_from_gen_poly
from .algebra.binpoly import (
    BinPoly,
    count_divisors,
    divisors_of_xn_plus_1,
    factor_xn_plus_1,
    format_factored,
)
from .distance import DEFAULT_MAX_DIM
from .eaqec import eaqec_from_trace
from .fixtures import TIERS, load_fixtures, run, select
from .report import (
    Descriptor,
    DescriptorError,
    analyze,
    format_human,
    format_machine,
    parse_descriptor,
)
from .tracecode import min_distance, trace_code_of

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
SEARCH_MAX_LENGTH = 128  # 2n
SEARCH_MAX_DIVISORS = 10**6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def cmd_factor(n: int, out) -> int:
    if n < 1:
        raise UsageError("n must be at least 1")
    fac = factor_xn_plus_1(n)
    print(f"x^{n}+1 = {format_factored(BinPoly.x_n_plus_1(n))}", file=out)
    for g, e in fac:
        print(f"  {g}" + (f"  ^{e}" if e > 1 else ""), file=out)
    print(f"divisors: {count_divisors(n)}", file=out)
    return EXIT_OK


def cmd_analyze(desc: Descriptor, max_dim: int, machine: bool, method: str, out) -> int:
    rec = analyze(desc, max_dim=max_dim, method=method)
    print(format_machine(rec) if machine else format_human(rec), file=out)
    return EXIT_OK


def cmd_verify(tier: str, out) -> int:
    cases = select(load_fixtures(), tier)
    counts = {"verified": 0, "consistent-with": 0, "MISMATCH": 0}
    for chk in run(cases):
        counts[chk.status] += 1
        print(chk.line(), file=out)
    summary = ", ".join(f"{v} {k}" for k, v in counts.items())
    verdict = "FAIL" if counts["MISMATCH"] else "PASS"
    print(f"{verdict}: {len(cases)} cases, {summary}", file=out)
    return EXIT_MISMATCH if counts["MISMATCH"] else EXIT_OK


def search_records(n: int, maximal: bool = False, min_d: int = 0, min_k: int = 0,
                   max_dim: int = DEFAULT_MAX_DIM) -> list[dict]:
    """Trace-code and EAQEC parameters for every divisor g of x^{2n}+1.

    Distinct g often share a trace code, so distances are cached per r.
    Records are ordered by (d desc, k desc) with ties kept in divisor order.
    """
    if n < 1:
        raise UsageError("n must be at least 1")
    if 2 * n > SEARCH_MAX_LENGTH:
        raise UsageError(f"2n = {2 * n} exceeds the search bound {SEARCH_MAX_LENGTH}")
    ndiv = count_divisors(2 * n)
    if ndiv > SEARCH_MAX_DIVISORS:
        raise UsageError(f"x^{2 * n}+1 has {ndiv} divisors, above the bound {SEARCH_MAX_DIVISORS}")
    dist_cache: dict[BinPoly, int | None] = {}
    recs = []
    for g in divisors_of_xn_plus_1(2 * n):
        C = acc_from_gen_poly(g, n)
        tc = trace_code_of(C)
        if tc.r not in dist_cache:
            d = min_distance(tc, max_dim)
            dist_cache[tc.r] = d if isinstance(d, int) else None
        d = dist_cache[tc.r]
        e = eaqec_from_trace(tc, d, source=format_factored(g))
        if maximal and not e.maximal:
            continue
        if e.k < min_k or (min_d and (d is None or d < min_d)):
            continue
        recs.append({
            "g": format_factored(g), "acc_dim": C.dim, "r": format_factored(tc.r),
            "trace": f"[{n},{tc.dim},{'?' if d is None else d}]",
            "eaqec": e.brackets(), "rate": f"{float(e.rate):.4f}",
            "net": f"{float(e.net_rate):.4f}", "maximal": e.maximal,
            "_key": (-(d if d is not None else -1), -e.k),
        })
    recs.sort(key=lambda r: r["_key"])
    for r in recs:
        del r["_key"]
    return recs


def cmd_search(n: int, maximal: bool, min_d: int, min_k: int, max_dim: int,
               machine: bool, out) -> int:
    recs = search_records(n, maximal, min_d, min_k, max_dim)
    for r in recs:
        if machine:
            print(format_machine(r), file=out)
        else:
            flag = " maximal" if r["maximal"] else ""
            print(f"{r['eaqec']:<16} trace={r['trace']:<12} rate={r['rate']} "
                  f"net={r['net']}{flag}  g={r['g']}", file=out)
    if not machine:
        print(f"{len(recs)} records", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conjucode", description="Additive conjucyclic codes over GF(4), their "
                                              "binary trace codes and EAQEC parameters.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("factor", help="factor x^n+1 over GF(2)")
    f.add_argument("n", type=int)

    a = sub.add_parser("analyze", help="full report for one code")
    a.add_argument("--n", type=int, required=True)
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--g", help="generator polynomial of the binary image, e.g. '(1+x)^2*(1+x+x^3)'")
    src.add_argument("--v", help="generator vector over GF(4), symbols 0,1,w,W")
    a.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="largest dimension enumerated exhaustively (default %(default)s)")
    a.add_argument("--method", choices=("exhaustive", "info-sets"), default="exhaustive")
    a.add_argument("--machine", action="store_true", help="one key=value record per line")

    v = sub.add_parser("verify", help="check the bundled fixtures")
    v.add_argument("--tier", choices=TIERS, default="fast")

    s = sub.add_parser("search", help="rank all trace codes of length n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--maximal", action="store_true", help="only maximal-entanglement codes")
    s.add_argument("--min-d", type=int, default=0)
    s.add_argument("--min-k", type=int, default=0)
    s.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    s.add_argument("--machine", action="store_true")
    return p


def _descriptor(args) -> Descriptor:
    text = f"n={args.n} " + (f"g={args.g}" if args.g is not None else f"v={args.v}")
    return parse_descriptor(text)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "factor":
            return cmd_factor(args.n, out)
        if args.command == "analyze":
            return cmd_analyze(_descriptor(args), args.max_dim, args.machine, args.method, out)
        if args.command == "verify":
            return cmd_verify(args.tier, out)
        return cmd_search(args.n, args.maximal, args.min_d, args.min_k, args.max_dim,
                          args.machine, out)
    except (UsageError, DescriptorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # divisibility and similar errors from the library, surfaced verbatim
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
