"""Command line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .brackets import C6_BRACKET, Bracket, extend_bracket
from .counting import bracket, independence_polynomial, value_at_minus_one
from .decycling import PhiCertificate, min_decycling
from .edgelist import EdgeListError, format_edge_list, read_edge_list
from .graph import RootedGraph, extend, make_cycle
from .synth import BoundViolation, CertificateError, from_json, realize, synth, to_json
from .verify import LEVELS, default_level, sweep_targets, verify_certificate, verify_kq

OK, FAIL, USAGE = 0, 1, 2

# I(C6^l; -1) for l = 0..6 reference values
C6_TABLE = [(2, 1, -1), (1, 2, 1), (-1, 1, 2), (-2, -1, 1), (-1, -2, -1), (1, -1, -2), (2, 1, -1)]


class UsageError(Exception):
    pass


def _load_graph(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except EdgeListError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_synth(args) -> int:
    try:
        cert = synth(args.k, args.q)
    except BoundViolation as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rg = realize(cert)
    text = format_edge_list(rg, comment=f"connected ({args.k},{args.q})-graph")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.cert:
        Path(args.cert).write_text(to_json(cert) + "\n")
    out = sys.stderr if not args.out else sys.stdout
    print(
        f"|V| = {rg.n}  |E| = {rg.graph.m}  k = {args.k}  q = {args.q}  bracket = {bracket(rg)}",
        file=out,
    )
    return OK


def cmd_eval(args) -> int:
    G, root = _load_graph(args.graph)
    print(f"I(-1) = {value_at_minus_one(G)}")
    if args.poly:
        print(independence_polynomial(G))
    if root is not None:
        print(f"bracket = {bracket(RootedGraph(G, root))}")
    return OK


def cmd_fvs(args) -> int:
    G, _ = _load_graph(args.graph)
    phi, witness = min_decycling(G)
    print(f"phi = {phi}")
    print("witness = " + " ".join(map(str, sorted(witness))))
    return OK


def cmd_verify(args) -> int:
    G, _ = _load_graph(args.graph)
    phi_cert = None
    if args.phi_cert:
        try:
            phi_cert = PhiCertificate.from_dict(json.loads(Path(args.phi_cert).read_text()))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad phi certificate {args.phi_cert}: {exc}") from exc
    rep = verify_kq(G, args.k, args.q, args.level or default_level(args.k), phi_cert)
    print(rep.to_json() if args.json else rep.to_text())
    return OK if rep.passed else FAIL


def cmd_verify_cert(args) -> int:
    try:
        cert = from_json(Path(args.cert).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc.strerror}") from exc
    except CertificateError as exc:
        raise UsageError(f"{args.cert}: {exc}") from exc
    rep = verify_certificate(cert)
    print(rep.to_json() if args.json else rep.to_text())
    return OK if rep.passed else FAIL


def cmd_table(args) -> int:
    if args.name != "c6":
        raise UsageError(f"unknown table {args.name!r}; available: c6")
    base = RootedGraph(make_cycle(6), 0)
    bad = 0
    print("l  computed       algebra        expected")
    for ell, want in enumerate(C6_TABLE):
        got = bracket(extend(base, ell))
        alg = extend_bracket(C6_BRACKET, ell)
        ok = got == alg == Bracket(*want)
        bad += not ok
        print(f"{ell}  {str(got):<14} {str(alg):<14} {str(Bracket(*want)):<14} {'ok' if ok else 'MISMATCH'}")
    return OK if not bad else FAIL


def cmd_sweep(args) -> int:
    results = sweep_targets(args.k, args.level, args.jobs)
    passes = 0
    for q, ok, failed in results:
        passes += ok
        print(f"k={args.k} q={q:>6}  {'pass' if ok else 'FAIL ' + ','.join(failed)}")
    print(f"{passes}/{len(results)} passes")
    return OK if passes == len(results) else FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("synth", help="build a connected graph with phi = k and I(G;-1) = q")
    s.add_argument("k", type=int)
    s.add_argument("q", type=int)
    s.add_argument("--out", help="edge-list output path (default stdout)")
    s.add_argument("--cert", help="also write the construction certificate here")
    s.set_defaults(fn=cmd_synth)

    s = sub.add_parser("eval", help="I(G;-1), optionally the full polynomial")
    s.add_argument("graph")
    s.add_argument("--poly", action="store_true", help="print coefficients s_0 .. s_alpha")
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("fvs", help="exact decycling number")
    s.add_argument("graph")
    s.set_defaults(fn=cmd_fvs)

    s = sub.add_parser("verify", help="check that a graph is a connected (k,q)-graph")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--level", choices=LEVELS)
    s.add_argument("--phi-cert", help="JSON with 'cycles' and 'decycling_set'")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("verify-cert", help="check a construction certificate")
    s.add_argument("cert")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_verify_cert)

    s = sub.add_parser("table", help="reproduce a bracket table")
    s.add_argument("name", help="c6")
    s.set_defaults(fn=cmd_table)

    s = sub.add_parser("sweep", help="synthesize and verify every q in [-2^k, 2^k]")
    s.add_argument("k", type=int)
    s.add_argument("--level", choices=LEVELS)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
