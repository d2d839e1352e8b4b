"""Command-line interface.  Every command prints one JSON object.

Exit codes: 0 success, 2 invalid input, 3 a checked identity failed (the
counterexample is part of the printed object).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fcr, howe, ideals, verify
from . import weyl as W
from .exactlin import fmt_rat, parse_rat
from .rootsys import KINDS, RootSystem, build

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DIVERGENCE = 3


class CliError(ValueError):
    pass


def _fmt(v) -> list:
    return [fmt_rat(x) for x in v]


def _system(args) -> RootSystem:
    if args.n is not None and args.rank is not None:
        raise CliError("give either --n or --rank, not both")
    if args.n is not None:
        return build(args.kind, args.n)
    if args.rank is not None:
        return verify.system_for(args.kind, args.rank)
    raise CliError("one of --n or --rank is required")


def _load_ideal(path: str) -> ideals.LinearIdeal:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        obj = json.loads(text)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CliError("ideal file must hold a JSON object")
    return ideals.from_json(obj)


def _element(rs: RootSystem, text: str) -> W.WeylElement:
    return W.from_word(rs, W.parse_word(text))


# ---------------------------------------------------------------------------
# commands


def cmd_rootsys_info(args) -> dict:
    rs = _system(args)
    return {
        "system": rs.to_json(),
        "label": rs.label,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "semisimple": rs.is_semisimple,
        "simple_roots": [_fmt(a) for a in rs.simple_roots],
        "simple_coroots": [_fmt(h) for h in rs.simple_coroots()],
        "positive_roots": [_fmt(a) for a in rs.positive_roots],
        "rho": _fmt(rs.rho),
        "fundamental_weights": [_fmt(w) for w in rs.fundamental_weights()],
        "weyl_group_order": rs.group_order(),
    }


def cmd_weyl_inversions(args) -> dict:
    rs = _system(args)
    w = _element(rs, args.word)
    inv = W.inversion_list(rs, w)
    return {
        "system": rs.to_json(),
        "word": args.word,
        "images": list(w.images),
        "reduced_word": W.format_word(W.reduced_word(rs, w)),
        "length": len(inv),
        "inversions": [_fmt(a) for a in inv],
        "rho_difference": _fmt(W.rho_difference(rs, w)),
    }


def _ideal_summary(omega: ideals.LinearIdeal) -> dict:
    cert = ideals.strong_dominance_certificate(omega)
    data = ideals.integral_root_data(omega)
    return {
        "ideal": omega.to_json(),
        "variety": omega.describe(),
        "b_lambda": [_fmt(a) for a in data.b_lambda],
        "strongly_dominant": cert.dense,
        "reason": cert.reason,
        "dominant": ideals.is_dominant(omega),
        "lambda_plus": ideals.lambda_plus_class(omega),
    }


def cmd_ideal_dot(args) -> dict:
    omega = _load_ideal(args.ideal)
    w = _element(omega.rs, args.word)
    moved = ideals.dot_act(w, omega)
    return {"word": args.word, "input": omega.to_json(), "result": moved.to_json(), "variety": moved.describe()}


def cmd_ideal_info(args) -> dict:
    return _ideal_summary(_load_ideal(args.ideal))


def cmd_fcr_decide(args) -> dict:
    omega = _load_ideal(args.ideal)
    return fcr.fcr_decide(omega).to_json(omega.rs)


def cmd_fcr_lambda_set(args) -> dict:
    omega = _load_ideal(args.ideal)
    pieces = fcr.lambda_set(omega, args.bound)
    return {"bound": args.bound, "count": len(pieces), "pieces": fcr.pieces_to_json(pieces)}


def cmd_fcr_contains(args) -> dict:
    omega = _load_ideal(args.ideal)
    mu = tuple(parse_rat(x) for x in args.weight.replace(",", " ").split())
    return {"weight": _fmt(mu), "contains": fcr.annihilator_contains(omega, mu)}


def cmd_howe_case_a(args) -> dict:
    rep = howe.closure_case_A(args.p, args.q, args.k, args.bound).to_json()
    if args.csv:
        rows = howe.enumerate_case_A(args.p, args.q, args.k, args.bound)
        Path(args.csv).write_text(howe.export_case_A_csv(rows))
        rep["csv"] = args.csv
    return rep


def cmd_howe_case_b(args) -> dict:
    if (args.p is None) == (args.k is None):
        raise CliError("give exactly one of --p (k = 2p) or --k")
    if args.k is not None and args.k % 2:
        return howe.odd_k_case_B(args.n, args.k, args.bound).to_json()
    p = args.p if args.p is not None else args.k // 2
    rep = howe.closure_case_B(args.n, p, args.bound).to_json()
    if p < args.n:
        rep["fcr"] = howe.case_B_fcr(args.n, p).to_json()
    rep["kernel"] = howe.kernel_report("B", args.n, 2 * p)
    return rep


def cmd_howe_case_c(args) -> dict:
    return howe.case_C_report(args.n, args.k)


def cmd_verify(args) -> dict:
    return verify.run_suite(args.suite, args.type, args.rank, args.seed, args.count)


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    """Usage errors are reported as a JSON diagnostic with exit code 2."""

    def error(self, message: str):
        _emit({"error": "invalid arguments", "message": message, "usage": self.format_usage().strip()})
        raise SystemExit(EXIT_INVALID)


def _add_system(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", "--type", dest="kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int, help="size parameter of the family (GL(n), A(n), B(n), ...)")
    p.add_argument("--rank", type=int, help="semisimple rank (GL of rank r is GL(r+1))")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fcrweyl", description="Weyl group combinatorics, linear ideals and FCR decisions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rs = sub.add_parser("rootsys").add_subparsers(dest="action", required=True)
    p = p_rs.add_parser("info", help="roots, coroots, rho and fundamental weights")
    _add_system(p)
    p.set_defaults(func=cmd_rootsys_info)

    p_w = sub.add_parser("weyl").add_subparsers(dest="action", required=True)
    p = p_w.add_parser("inversions", help="inversion set of a word")
    _add_system(p)
    p.add_argument("--word", required=True, help='e.g. "s1 s2" (empty string for the identity)')
    p.set_defaults(func=cmd_weyl_inversions)

    p_i = sub.add_parser("ideal").add_subparsers(dest="action", required=True)
    p = p_i.add_parser("dot", help="dot action of a word on an ideal")
    p.add_argument("--ideal", required=True, help="JSON file, or - for stdin")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_ideal_dot)
    p = p_i.add_parser("info", help="integral roots, strong dominance and dominance")
    p.add_argument("--ideal", required=True)
    p.set_defaults(func=cmd_ideal_info)

    p_f = sub.add_parser("fcr").add_subparsers(dest="action", required=True)
    p = p_f.add_parser("decide", help="classify the prime factor of an ideal")
    p.add_argument("--ideal", required=True)
    p.set_defaults(func=cmd_fcr_decide)
    p = p_f.add_parser("lambda-set", help="bounded set of dominant weights above the ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_fcr_lambda_set)
    p = p_f.add_parser("contains", help="whether a dominant weight's orbit meets the variety")
    p.add_argument("--ideal", required=True)
    p.add_argument("--weight", required=True, help='e.g. "2 1 0"')
    p.set_defaults(func=cmd_fcr_contains)

    p_h = sub.add_parser("howe").add_subparsers(dest="action", required=True)
    p = p_h.add_parser("case-a", help="(GL_k, gl_{p+q}) closure components")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--csv", help="also write the weight table to this file")
    p.set_defaults(func=cmd_howe_case_a)
    p = p_h.add_parser("case-b", help="(O_k, sp_2n) closure components")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--bound", type=int, default=3)
    p.set_defaults(func=cmd_howe_case_b)
    p = p_h.add_parser("case-c", help="(Sp_2k, so_2n) summary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_howe_case_c)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=verify.SUITES + ("all",))
    p.add_argument("--type", choices=KINDS)
    p.add_argument("--rank", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="ideals per system for the seeded suites")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (fcr.WitnessDivergence, howe.HoweDivergence) as exc:
        _emit({"error": "divergence", "message": str(exc), "counterexample": exc.payload})
        return EXIT_DIVERGENCE
    except AssertionError as exc:
        _emit({"error": "divergence", "message": str(exc)})
        return EXIT_DIVERGENCE
    except (ValueError, ZeroDivisionError) as exc:
        _emit({"error": "invalid input", "type": type(exc).__name__, "message": str(exc)})
        return EXIT_INVALID
    _emit(report)
    if args.command == "verify" and report["failures"]:
        return EXIT_DIVERGENCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
