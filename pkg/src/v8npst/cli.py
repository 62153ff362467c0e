"""Command-line front end.

Three subcommands, each printing a single JSON document on stdout (a short
human-readable summary goes to stderr when attached to a terminal):

  analyze --n N --set SPEC [--verify]
  search  --n N [--max-classes K] [--verify] [--workers W]
  probe   --n N --set SPEC --u U --v V [--grid POINTS]

SPEC is either a '+'-joined list of conjugacy-class tags (as printed by the
analyzer, e.g. "b+a*b") or a comma-separated list of explicit elements
"a^r*b^s".  Explicit lists are validated as-is and never auto-symmetrised.

Exit codes: 0 ok, 1 usage error, 2 invalid connection set, 3 numerically
ambiguous integrality, 4 decision/oracle disagreement (with --verify).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import oracle, pst, spectrum
from .group import (
    ConnectionSet,
    ConnectionSetError,
    GroupParams,
    conjugacy_classes,
    element_str,
    enumerate_connection_sets,
    parse_element,
    validate_connection_set,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_SET = 2
EXIT_AMBIGUOUS = 3
EXIT_DISAGREEMENT = 4

DEFAULT_GRID_POINTS = 10_000
POSITIVE_TOL = 1e-6
NEGATIVE_TOL = 1e-4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _grid_points() -> int:
    raw = os.environ.get("PST_GRID_POINTS")
    if raw is None:
        return DEFAULT_GRID_POINTS
    try:
        val = int(raw)
        if val < 1:
            raise ValueError
        return val
    except ValueError:
        raise SystemExit(EXIT_USAGE)


def _f(x: float):
    """Canonical 12-significant-digit float for deterministic reports."""
    return float(f"{x:.12g}")


def parse_set_spec(params: GroupParams, text: str) -> ConnectionSet:
    """Resolve a connection-set specifier to a validated set."""
    text = text.strip()
    if not text:
        raise ConnectionSetError("empty connection-set specifier")
    classes = conjugacy_classes(params)
    by_tag = {c.tag: c for c in classes}
    if "," in text:
        members = [parse_element(params, part) for part in text.split(",")]
        return validate_connection_set(params, members)
    parts = [p.strip() for p in text.split("+")]
    if all(p in by_tag for p in parts):
        members = frozenset().union(*(by_tag[p].members for p in parts))
        return validate_connection_set(params, members)
    # single explicit element, or a typo'd tag; try element syntax
    members = [parse_element(params, part) for part in parts]
    return validate_connection_set(params, members)


def _spectrum_json(table: spectrum.SpectrumTable) -> list[dict]:
    out = []
    for ev in table.eigenvalues:
        value = ev.integer_value if ev.is_integer else _f(ev.value)
        out.append(
            {
                "label": ev.label,
                "value": value,
                "multiplicity": ev.multiplicity,
                "integer": ev.is_integer,
            }
        )
    return out


def _types_json(table: spectrum.SpectrumTable):
    if table.params.is_odd:
        return None
    t = pst.classify_graph_type(table)
    return {"type1": t.type1, "type2": t.type2, "type3": t.type3}


def _pst_pairs_json(verdicts) -> list[dict]:
    return [
        {
            "u": v.u,
            "v": v.v,
            "clause": v.clause,
            "minTimeOverPi": _f(1.0 / v.M),
        }
        for v in verdicts
    ]


def _oracle_check(conn, table, verdicts, grid_points: int):
    """Corroborate every verdict; returns (json block, disagreement count)."""
    times = np.arange(1, grid_points + 1) * (2 * math.pi / grid_points)
    disagreements = 0
    max_dev = 0.0
    pos_pairs = {(v.u, v.v) for v in verdicts} | {(v.v, v.u) for v in verdicts}
    for v in verdicts:
        amp = oracle.pair_amplitudes(conn, v.u, v.v, [v.min_time], table)[0]
        max_dev = max(max_dev, 1.0 - amp)
        if amp <= 1.0 - POSITIVE_TOL:
            disagreements += 1
    best = oracle.grid_amplitude_maxima(conn, times, table)
    W = oracle.ratio_index_table(conn.params)
    order = conn.params.order
    for u in range(order):
        for w in range(u + 1, order):
            if (u, w) in pos_pairs:
                continue
            if best[W[u, w]] >= 1.0 - NEGATIVE_TOL:
                disagreements += 1
    return (
        {"checked": True, "maxDeviation": _f(max_dev)},
        disagreements,
    )


def _analysis_report(conn, table, *, verify: bool, grid_points: int):
    verdicts = pst.all_pst_pairs(table)
    report = {
        "n": conn.params.n,
        "parity": conn.params.parity,
        "connectionSet": {
            "classes": list(conn.class_tags),
            "elements": [element_str(x) for x in conn.sorted_members()],
            "size": len(conn),
        },
        "spectrum": _spectrum_json(table),
        "integral": table.all_integral,
        "types": _types_json(table),
        "pstPairs": _pst_pairs_json(verdicts),
        "oracle": {"checked": False, "maxDeviation": None},
    }
    disagreements = 0
    if verify:
        report["oracle"], disagreements = _oracle_check(
            conn, table, verdicts, grid_points
        )
    return report, disagreements


def _emit(doc, human_lines=None) -> None:
    print(json.dumps(doc, indent=2, sort_keys=False))
    if human_lines and sys.stderr.isatty():  # pragma: no cover - terminal only
        for line in human_lines:
            print(line, file=sys.stderr)


def _structured_error(code: str, message: str, exit_code: int) -> int:
    print(json.dumps({"error": {"code": code, "message": message}}, indent=2))
    return exit_code


def cmd_analyze(args) -> int:
    params = GroupParams(args.n)
    try:
        conn = parse_set_spec(params, args.set)
    except (ConnectionSetError, ValueError) as exc:
        return _structured_error(type(exc).__name__, str(exc), EXIT_INVALID_SET)
    try:
        table = spectrum.eigenvalues(conn)
    except spectrum.NumericallyAmbiguous as exc:
        return _structured_error("NumericallyAmbiguous", str(exc), EXIT_AMBIGUOUS)
    report, disagreements = _analysis_report(
        conn, table, verify=args.verify, grid_points=_grid_points()
    )
    human = [
        f"Cay(V_{8 * args.n}, S) |S|={len(conn)} integral={report['integral']} "
        f"pst-pairs={len(report['pstPairs'])}"
    ]
    _emit(report, human)
    return EXIT_DISAGREEMENT if disagreements else EXIT_OK


def cmd_search(args) -> int:
    if args.n > args.max_n:
        return _structured_error(
            "BoundExceeded", f"n={args.n} above configured bound {args.max_n}", EXIT_USAGE
        )
    params = GroupParams(args.n)
    max_classes = args.max_classes or len(conjugacy_classes(params))
    sets = list(enumerate_connection_sets(params, max_classes))
    grid_points = _grid_points()

    def run(conn):
        table = spectrum.eigenvalues(conn)
        return _analysis_report(
            conn, table, verify=args.verify, grid_points=grid_points
        )

    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(run, sets))
    else:
        results = [run(conn) for conn in sets]

    reports = [r for r, _ in results]
    disagreements = sum(d for _, d in results)
    pst_reports = [r for r in reports if r["pstPairs"]]
    summary = {
        "n": args.n,
        "parity": params.parity,
        "maxClasses": max_classes,
        "totalSets": len(sets),
        "integralCount": sum(1 for r in reports if r["integral"]),
        "pstCount": len(pst_reports),
        "verified": bool(args.verify),
        "disagreements": disagreements,
        "sets": [
            {
                "classes": r["connectionSet"]["classes"],
                "size": r["connectionSet"]["size"],
                "integral": r["integral"],
                "pstPairCount": len(r["pstPairs"]),
            }
            for r in reports
        ],
        "pstGraphs": pst_reports,
    }
    _emit(summary, [f"{len(sets)} sets, {len(pst_reports)} with transfer"])
    return EXIT_DISAGREEMENT if disagreements else EXIT_OK


def cmd_probe(args) -> int:
    params = GroupParams(args.n)
    try:
        conn = parse_set_spec(params, args.set)
    except (ConnectionSetError, ValueError) as exc:
        return _structured_error(type(exc).__name__, str(exc), EXIT_INVALID_SET)
    order = params.order
    if not (0 <= args.u < order and 0 <= args.v < order):
        return _structured_error(
            "VertexOutOfRange", f"vertices must lie in [0, {order})", EXIT_USAGE
        )
    try:
        table = spectrum.eigenvalues(conn)
    except spectrum.NumericallyAmbiguous as exc:
        return _structured_error("NumericallyAmbiguous", str(exc), EXIT_AMBIGUOUS)
    grid_points = args.grid or _grid_points()
    times = np.arange(0, grid_points + 1) * (2 * math.pi / grid_points)
    best = oracle.pst_probe(conn, args.u, args.v, times, table)
    candidates = []
    note = None
    if table.all_integral:
        M = pst.gap_gcd(table)
        for ell in range(8):
            tau = math.pi / M * (1 + 2 * ell)
            amp = oracle.pair_amplitudes(conn, args.u, args.v, [tau], table)[0]
            candidates.append({"ell": ell, "tau": _f(tau), "amplitude": _f(float(amp))})
    else:
        # H is not 2pi-periodic for non-integral spectra; the scan is
        # evidence over the window only, not a certificate
        note = "grid-limited evidence: non-integral spectrum"
    report = {
        "n": args.n,
        "connectionSet": {"classes": list(conn.class_tags), "size": len(conn)},
        "u": args.u,
        "v": args.v,
        "gridPoints": grid_points,
        "best": {"tau": _f(best.tau), "amplitude": _f(best.amplitude)},
        "candidates": candidates,
        "note": note,
    }
    _emit(report, [f"best |H|={best.amplitude:.9f} at tau={best.tau:.6f}"])
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="v8npst", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def positive_int(text: str) -> int:
        val = int(text)
        if val < 1:
            raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
        return val

    pa = sub.add_parser("analyze", help="spectrum, types and transfer pairs of one graph")
    pa.add_argument("--n", type=positive_int, required=True)
    pa.add_argument("--set", required=True)
    pa.add_argument("--verify", action="store_true")
    pa.set_defaults(func=cmd_analyze)

    ps = sub.add_parser("search", help="enumerate all class-union connection sets")
    ps.add_argument("--n", type=positive_int, required=True)
    ps.add_argument("--max-classes", type=positive_int, default=None)
    ps.add_argument("--max-n", type=positive_int, default=8, help=argparse.SUPPRESS)
    ps.add_argument("--verify", action="store_true")
    ps.add_argument("--workers", type=positive_int, default=1)
    ps.set_defaults(func=cmd_search)

    pp = sub.add_parser("probe", help="numeric |H(tau)_{uv}| scan for one pair")
    pp.add_argument("--n", type=positive_int, required=True)
    pp.add_argument("--set", required=True)
    pp.add_argument("--u", type=int, required=True)
    pp.add_argument("--v", type=int, required=True)
    pp.add_argument("--grid", type=positive_int, default=None)
    pp.set_defaults(func=cmd_probe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
