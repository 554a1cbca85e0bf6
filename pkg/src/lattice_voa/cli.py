"""Command-line entry point.

Exit codes: 0 on success, 1 on bad input (unreadable or invalid lattice, bad
flags), 2 when a verification suite reports a failure.  JSON output always
carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .cocycle import build_cocycle, verify_cocycle_identities
from .errors import LatticeVOAError, ParseError
from .fock.checks import DEFAULT_TRUNC, DEFAULT_WINDOW, run_fock_suite
from .fock.series import delta_coefficients
from .fusion import AS_STATED, TWISTED_RULES, enumerate_labels, fusion_table, verify_ring_axioms
from .lattice import discriminant_group, validate_lattice
from .twisted import (
    check_commutator_relation,
    check_eta_relations,
    check_intertwiner_commutation,
    twisted_summary,
)

SCHEMA = 1
SUITES = ("cocycle", "ring", "fock")
EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which here means "verification failed"
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def load_lattice(path: str):
    """Read ``{"gram": [[...]]}`` from ``path`` and validate it."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: malformed JSON ({exc})") from None
    if not isinstance(data, dict) or "gram" not in data:
        raise ParseError(f'{path}: expected an object with a "gram" field')
    return validate_lattice(data["gram"])


def _q(x) -> str:
    return str(x)


def _vec(v) -> list:
    return [_q(x) for x in v]


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


# -- commands -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    L = load_lattice(args.lattice)
    D = discriminant_group(L)
    tw = twisted_summary(L)
    labels = enumerate_labels(L)
    n_untw = D.order
    payload = {
        "command": "analyze",
        "gram": [list(r) for r in L.gram],
        "rank": L.rank,
        "det": L.det,
        "invariant_factors": list(D.invariant_factors),
        "coset_reps": [_vec(r) for r in D.reps],
        **tw,
        "untwisted_sectors": n_untw,
        "twisted_sectors": len(labels) - n_untw,
        "labels": [str(x) for x in labels],
    }
    text = "\n".join(
        [
            f"rank {L.rank}, det {L.det}, invariant factors {list(D.invariant_factors) or '[] (unimodular)'}",
            f"quotient group order {tw['group_order']}, center order {tw['center_order']}",
            f"central characters {tw['num_characters']}, dim T_chi = {tw['dim_T_chi']}",
            f"sectors: {n_untw} untwisted + {len(labels) - n_untw} twisted",
            "labels: " + ", ".join(payload["labels"]),
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_fusion_table(args) -> int:
    L = load_lattice(args.lattice)
    table = fusion_table(L, args.rule)
    payload = {"command": "fusion-table", "rule": args.rule, **table.as_json()}
    text = table.as_text()
    code = EXIT_OK
    if args.verify:
        report = verify_ring_axioms(table)
        payload["verification"] = report.as_dict()
        text += "\n\n" + _ring_text(report)
        code = EXIT_OK if report.passed else EXIT_FAILED
    _emit(args, payload, text)
    return code


def _ring_text(report) -> str:
    lines = []
    for name, n in report.checks.items():
        bad = len(report.failures[name])
        lines.append(f"{'PASS' if not bad else 'FAIL'} {name}: {n} instances, {bad} failures")
    if report.order_two_cosets:
        lines.append("order-two cosets (2 lam in L): " + ", ".join("(" + ",".join(r) + ")" for r in report.order_two_cosets))
    return "\n".join(lines)


def _relation_line(r) -> str:
    return f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.checked} checks, {len(r.failures)} failures"


def cmd_verify(args) -> int:
    L = load_lattice(args.lattice)
    suites = args.suite or list(SUITES)
    results = {}
    lines = []
    ok = True
    for suite in suites:
        t0 = time.perf_counter()
        if suite == "cocycle":
            rep = verify_cocycle_identities(build_cocycle(L), trials=args.trials, seed=args.seed)
            comm = check_commutator_relation(L)
            results["cocycle"] = {"identities": rep.as_dict(), "commutator_relation": comm.as_dict()}
            passed = rep.passed and comm.passed
            lines.append(f"{'PASS' if rep.passed else 'FAIL'} cocycle identities: {rep.trials} trials, {len(rep.failures)} failures")
            lines.append(_relation_line(comm))
        elif suite == "ring":
            report = verify_ring_axioms(fusion_table(L, args.rule))
            results["ring"] = {"rule": args.rule, **report.as_dict()}
            passed = report.passed
            lines.append(_ring_text(report))
        else:
            rels = [check_intertwiner_commutation(L), check_eta_relations(L)]
            ops = run_fock_suite(L, trunc=args.trunc, window=tuple(args.window))
            results["fock"] = {
                "trunc": args.trunc,
                "window": [_q(x) for x in args.window],
                "relations": [r.as_dict() for r in rels],
                "operators": {lam: [r.as_dict() for r in reps] for lam, reps in ops.items()},
            }
            passed = all(r.passed for r in rels) and all(r.passed for reps in ops.values() for r in reps)
            lines.extend(_relation_line(r) for r in rels)
            for lam, reps in ops.items():
                lines.extend(f"{_relation_line(r)} [lam={lam}]" for r in reps)
        ok = ok and passed
        print(f"suite {suite}: {'pass' if passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
    payload = {"command": "verify", "seed": args.seed, "suites": suites, "passed": ok, "results": results}
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_series(args) -> int:
    C = delta_coefficients(args.max_degree)
    rows = C.table()
    payload = {"command": "series", "max_degree": args.max_degree, "c": [[_q(x) for x in row] for row in rows]}
    lines = [f"c[m,n] for m+n <= {args.max_degree} (row m, column n)"]
    lines += [f"m={m}: " + "  ".join(_q(x) for x in row) for m, row in enumerate(rows)]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _positive(kind, lo):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{kind} must be an integer") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"{kind} must be >= {lo}")
        return v

    return conv


def _half_integer(s):
    try:
        x = Fraction(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not a number") from None
    if (2 * x).denominator != 1:
        raise argparse.ArgumentTypeError(f"{s} is not in (1/2)Z")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lattice-voa", description="Module labels and fusion rules of lattice vertex operator algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, lattice=True):
        if lattice:
            sp.add_argument("lattice", help='JSON file {"gram": [[...]]}')
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("analyze", help="discriminant group, twisted sectors, labels")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("fusion-table", help="full fusion table")
    common(sp)
    sp.add_argument("--verify", action="store_true", help="check the ring axioms; exit 2 on failure")
    sp.add_argument("--rule", choices=TWISTED_RULES, default=AS_STATED, help="condition used for twisted x twisted")
    sp.set_defaults(func=cmd_fusion_table)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", action="append", choices=SUITES, help="repeatable; default runs all")
    sp.add_argument("--trunc", type=_positive("trunc", 1), default=DEFAULT_TRUNC)
    sp.add_argument("--window", nargs=2, type=_half_integer, default=list(DEFAULT_WINDOW), metavar=("LO", "HI"), help="exponent window of the fock suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=_positive("trials", 1), default=1000)
    sp.add_argument("--rule", choices=TWISTED_RULES, default=AS_STATED)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("series", help="the c[m,n] table as exact fractions")
    common(sp, lattice=False)
    sp.add_argument("--max-degree", type=_positive("max-degree", 0), required=True)
    sp.set_defaults(func=cmd_series)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"{args.command}: FileNotFound: {exc.filename}", file=sys.stderr)
    except LatticeVOAError as exc:
        print(f"{args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
