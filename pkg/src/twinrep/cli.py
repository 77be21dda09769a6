"""Command-line interface: ``twinrep <subcommand> [options]``.

Exit status: 0 success, 1 mathematical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import analysis, reps
from .errors import TwinRepError
from .freegroup import jacobian_matrix, magnus_specialize, parse_automorphism
from .matrix import Matrix
from .ring import format_rational, parse_laurent, parse_rational
from .suite import verify_paper_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _poly_flag(value, name):
    if value is None:
        return None
    try:
        return parse_laurent(value)
    except (TwinRepError, ValueError) as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _descriptor(args) -> dict:
    params = {}
    for name in ("f", "b", "g", "a", "c"):
        val = _poly_flag(getattr(args, name, None), name)
        if val is not None:
            params[name] = str(val)
    if args.family is not None:
        params["family"] = args.family
    if args.kind is not None:
        params["kind"] = args.kind
    if args.form is not None:
        params["form"] = args.form
    n = args.n if args.n is not None else 2
    return {"rep": args.rep, "n": n, "params": params}


def _build_rep(args) -> reps.MatrixRep:
    desc = _descriptor(args)
    try:
        return reps.from_descriptor(desc)
    except (TwinRepError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _rep_text(rep: reps.MatrixRep) -> str:
    blocks = []
    for g, i in rep.generators():
        blocks.append(f"{'rho' if g == 'r' else 's'}{i} ->\n{rep.images[(g, i)].format()}")
    return "\n\n".join(blocks)


# -- subcommands --------------------------------------------------------------

def cmd_emit(args) -> int:
    rep = _build_rep(args)
    _emit(args, rep.to_json(), _rep_text(rep))
    return EXIT_OK


def cmd_check_relations(args) -> int:
    from .presentations import build_presentation

    rep = _build_rep(args)
    against = args.against or rep.kind
    try:
        pres = build_presentation(against, rep.n)
        report = analysis.verify_relations(rep, pres)
    except (TwinRepError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    lines = [f"{'ok  ' if r.holds else 'FAIL'} {r.label}: {r.lhs_word or '1'} = {r.rhs_word or '1'}"
             for r in report.results]
    for r in report.violations:
        lines.append(f"\n{r.label} lhs:\n{r.lhs.format()}\nrhs:\n{r.rhs.format()}")
    lines.append(f"{pres.name}: {len(report.violations)} violation(s) in {len(report.results)} relations")
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_irreducible(args) -> int:
    if args.n is None or args.n < 3:
        raise UsageError("--n must be at least 3")
    try:
        t0 = parse_rational(args.t)
        if t0 == 0:
            raise UsageError("--t must be nonzero")
        verdict = analysis.check_irreducibility_criterion(args.n, t0)
    except analysis.CriterionMismatch as exc:
        print(f"criterion mismatch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except TwinRepError as exc:
        raise UsageError(str(exc)) from None
    w = verdict.witness
    text = f"n={verdict.n} t={format_rational(verdict.t0)} dim={verdict.dim} verdict={verdict.verdict}"
    if w:
        text += f"\nwitness ({w.side}): {tuple(w.vector)} signs {w.signs}"
    _emit(args, verdict.to_json(), text)
    return EXIT_OK


def cmd_kernel_search(args) -> int:
    rep = _build_rep(args)
    if rep.kind != "T":
        raise UsageError("kernel-search needs a representation of T_n")
    words = analysis.kernel_search(rep, args.maxlen)
    payload = {"descriptor": rep.descriptor, "maxlen": args.maxlen, "kernel": [w.to_json() for w in words],
               "words": [str(w) for w in words]}
    text = "\n".join(str(w) for w in words) if words else "(no nontrivial kernel elements)"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_fox_jacobian(args) -> int:
    try:
        text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
        phi = parse_automorphism(text, args.rank)
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except TwinRepError as exc:
        raise UsageError(str(exc)) from None
    jac = jacobian_matrix(phi)
    spec = magnus_specialize(jac)
    payload = {
        "rank": phi.rank,
        "automorphism": [str(w) for w in phi.images],
        "jacobian": [[str(x) for x in row] for row in jac],
        "magnus": Matrix(spec).to_json(),
    }
    lines = [str(phi), "", "Jacobian:"]
    for r, row in enumerate(jac, 1):
        lines.append(f"  row {r}: " + " | ".join(str(x) for x in row))
    lines += ["", "Magnus specialization (x_k -> t):", Matrix(spec).format()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_classify_t2(args) -> int:
    try:
        m = Matrix.from_json(json.loads(args.matrix))
    except (json.JSONDecodeError, TwinRepError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"--matrix: {exc}") from None
    try:
        tag = analysis.classify_involution_2x2(m)
    except (analysis.NotInvolution, analysis.UnclassifiableInvolution) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except TwinRepError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"family": tag, "matrix": m.to_json()}, f"family {tag}")
    return EXIT_OK


def cmd_wt_obstruction(args) -> int:
    if args.n is None or args.n < 3:
        raise UsageError("--n must be at least 3")
    b = _poly_flag(args.b or "1", "b")
    try:
        res = analysis.wt_obstruction_check(args.n, b)
    except TwinRepError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"n={res.n} b={res.b} obstructed={res.obstructed}"]
    for c in res.checks:
        lines.append(f"  {'holds' if c['holds'] else 'fails'}  {c['relation']}")
    if res.witness:
        w = res.witness
        lines.append(f"witness: entry ({w['row']}, {w['col']}) of {w['relation']}: {w['lhs']} != {w['rhs']}")
    _emit(args, res.to_json(), "\n".join(lines))
    return EXIT_OK if res.obstructed else EXIT_FAIL


def cmd_verify_paper(args) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    text_mode = args.format == "text"

    def progress(res):
        if text_mode:
            status = "PASS" if res.passed else "FAIL"
            print(f"[{status}] {res.check_id:<18} {res.seconds:7.3f}s  {res.reference}", flush=True)

    start = time.perf_counter()
    report = verify_paper_suite(args.n_max, corrupt=args.corrupt_eta1, progress=progress)
    if text_mode:
        for res in report.checks:
            if not res.passed:
                print(f"  {res.check_id}: {json.dumps(res.detail, sort_keys=True)}")
        print(f"overall: {'PASS' if report.passed else 'FAIL'} ({time.perf_counter() - start:.2f}s)")
    else:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    rep_flags = argparse.ArgumentParser(add_help=False)
    rep_flags.add_argument("--rep", choices=reps.REP_NAMES, default="eta1")
    rep_flags.add_argument("--n", type=int)
    for name in ("f", "b", "g", "a", "c"):
        rep_flags.add_argument(f"--{name}", help="Laurent polynomial, e.g. '1 + t^-1'")
    rep_flags.add_argument("--family", type=int, choices=range(1, 6))
    rep_flags.add_argument("--kind", choices=("VT", "WT"), help="target group for --rep vtwt2")
    rep_flags.add_argument("--form", choices=("display", "quotient"), help="matrices for --rep eta1p")

    parser = argparse.ArgumentParser(prog="twinrep", description="Twin group representations, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("emit", parents=[common, rep_flags], help="print generator images")
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("check-relations", parents=[common, rep_flags], help="verify defining relations")
    p.add_argument("--against", choices=("T", "VT", "WT"))
    p.set_defaults(func=cmd_check_relations)

    p = sub.add_parser("irreducible", parents=[common], help="irreducibility of eta_1' at t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True, help="nonzero rational p/q")
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("kernel-search", parents=[common, rep_flags], help="bounded kernel search in T_n")
    p.add_argument("--maxlen", type=int, default=8)
    p.set_defaults(func=cmd_kernel_search)

    p = sub.add_parser("fox-jacobian", parents=[common], help="Fox Jacobian of an automorphism file")
    p.add_argument("--file", required=True, help="lines 'xi -> word'; '-' reads stdin")
    p.add_argument("--rank", type=int)
    p.set_defaults(func=cmd_fox_jacobian)

    p = sub.add_parser("classify-t2", parents=[common], help="family of a 2x2 involution")
    p.add_argument("--matrix", required=True, help='JSON, e.g. \'[["t","1"],["1 - t^2","-t"]]\'')
    p.set_defaults(func=cmd_classify_t2)

    p = sub.add_parser("wt-obstruction", parents=[common], help="relation (8) test for the VT extension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", default="1")
    p.set_defaults(func=cmd_wt_obstruction)

    p = sub.add_parser("verify-paper", parents=[common], help="run the full verification suite")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--corrupt-eta1", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "kernel-search" and args.maxlen < 0:
        print("twinrep: error: --maxlen must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"twinrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
