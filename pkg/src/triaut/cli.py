"""Command-line interface over files and stdin.

Exit codes: 0 success, 1 a checked mathematical property was falsified,
2 input or usage error.  With --json, output is a single object with the
fixed key set {command, inputs, result, diagnostics} on both success and
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness
from .automorphisms import commutator, compose, elementary_factorization, invert, power
from .derivations import bracket, exponential
from .errors import ParseError, PropertyViolation, TriangularityError
from .lie import closure_report, lie_closure
from .parsing import parse_automorphism, parse_derivation, parse_derivation_blocks


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triaut",
        description="Exact arithmetic for triangular automorphisms, derivations, "
                    "and the groups and Lie algebras they generate.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False, trials=None, word_len=None, cap=False):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        if trials is not None:
            p.add_argument("--trials", type=int, default=trials,
                           help=f"number of sampled trials (default {trials})")
        if word_len is not None:
            p.add_argument("--word-len", type=int, default=word_len,
                           help=f"maximum word length (default {word_len})")
        if cap:
            p.add_argument("--cap", type=int, default=50,
                           help="iteration ceiling (default 50)")

    p = sub.add_parser("compose", help="compose two automorphisms (first file outermost)")
    p.add_argument("outer"), p.add_argument("inner"), common(p)

    p = sub.add_parser("invert", help="invert an automorphism")
    p.add_argument("automorphism"), common(p)

    p = sub.add_parser("power", help="k-fold self-composition (negative k inverts)")
    p.add_argument("automorphism"), p.add_argument("k", type=int), common(p)

    p = sub.add_parser("commutator", help="phi psi phi^-1 psi^-1")
    p.add_argument("phi"), p.add_argument("psi"), common(p)

    p = sub.add_parser("factor", help="elementary factorization of an automorphism")
    p.add_argument("automorphism"), common(p)

    p = sub.add_parser("exp", help="exponential of a derivation at a rational parameter",
                       epilog="write flags first and '--' before a negative parameter: "
                              "triaut exp flow.der -- -1/2")
    p.add_argument("derivation"), p.add_argument("s", type=_rational), common(p)

    p = sub.add_parser("bracket", help="Lie bracket of two derivations")
    p.add_argument("first"), p.add_argument("second"), common(p)

    p = sub.add_parser("closure", help="bracket closure of derivations, with both series")
    p.add_argument("derivations", nargs="+",
                   help="files of derivation blocks separated by blank lines")
    common(p, cap=True)

    p = sub.add_parser("fuzz-degree", help="random products of T(m) never leave T(m^(n-1))")
    p.add_argument("n", type=int), p.add_argument("m", type=int)
    common(p, seed=True, trials=1000, word_len=8)

    p = sub.add_parser("derived-depth", help="iterated commutators fix a growing prefix")
    p.add_argument("n", type=int), p.add_argument("depth", type=int)
    common(p, seed=True, trials=50)

    p = sub.add_parser("unipotent-test", help="products of exponentials stay unitriangular")
    p.add_argument("derivations", nargs="+")
    common(p, seed=True, trials=200, word_len=6)

    p = sub.add_parser("counterexample",
                       help="order-two pair whose generated group is not algebraic",
                       epilog="write flags first and '--' before negative parameters: "
                              "triaut counterexample --word-len 8 -- -1/2 1/3")
    p.add_argument("a", type=_rational), p.add_argument("b", type=_rational)
    common(p, word_len=12)
    return parser


def _dispatch(args) -> tuple[list, object, str]:
    """Returns (inputs, json result, human text) for the parsed command."""
    cmd = args.command
    if cmd == "compose":
        outer = parse_automorphism(_read(args.outer))
        inner = parse_automorphism(_read(args.inner))
        result = compose(outer, inner)
        return ([{"name": "outer", "value": args.outer},
                 {"name": "inner", "value": args.inner}],
                {"automorphism": result.to_text()}, result.to_text())
    if cmd == "invert":
        phi = parse_automorphism(_read(args.automorphism))
        result = invert(phi)
        return ([{"name": "automorphism", "value": args.automorphism}],
                {"automorphism": result.to_text()}, result.to_text())
    if cmd == "power":
        phi = parse_automorphism(_read(args.automorphism))
        result = power(phi, args.k)
        return ([{"name": "automorphism", "value": args.automorphism},
                 {"name": "k", "value": args.k}],
                {"automorphism": result.to_text()}, result.to_text())
    if cmd == "commutator":
        phi = parse_automorphism(_read(args.phi))
        psi = parse_automorphism(_read(args.psi))
        result = commutator(phi, psi)
        return ([{"name": "phi", "value": args.phi},
                 {"name": "psi", "value": args.psi}],
                {"automorphism": result.to_text()}, result.to_text())
    if cmd == "factor":
        phi = parse_automorphism(_read(args.automorphism))
        factors = elementary_factorization(phi)
        texts = [f.to_text() for f in factors]
        return ([{"name": "automorphism", "value": args.automorphism}],
                {"factors": texts, "count": len(texts)},
                "\n".join(texts) if texts else "(identity: empty factorization)\n")
    if cmd == "exp":
        d = parse_derivation(_read(args.derivation))
        result = exponential(d, args.s)
        return ([{"name": "derivation", "value": args.derivation},
                 {"name": "s", "value": str(args.s)}],
                {"automorphism": result.to_text()}, result.to_text())
    if cmd == "bracket":
        d1 = parse_derivation(_read(args.first))
        d2 = parse_derivation(_read(args.second))
        result = bracket(d1, d2)
        return ([{"name": "first", "value": args.first},
                 {"name": "second", "value": args.second}],
                {"derivation": result.to_text()}, result.to_text())
    if cmd == "closure":
        generators = []
        for path in args.derivations:
            generators.extend(parse_derivation_blocks(_read(path)))
        basis = lie_closure(generators, cap=args.cap)
        report = closure_report(basis)
        human = (f"dimension: {report['dimension']}\n"
                 f"nilpotency class: {report['nilpotency_class']}\n"
                 f"lower central series: {report['lower_central_series']}\n"
                 f"derived series: {report['derived_series']}\n"
                 + "\n".join(report["basis"]))
        return ([{"name": "derivations", "value": path} for path in args.derivations],
                report, human)
    if cmd == "fuzz-degree":
        report = harness.degree_fuzz(args.n, args.m, args.word_len, args.trials,
                                     seed=args.seed)
        return ([{"name": "n", "value": args.n}, {"name": "m", "value": args.m},
                 {"name": "word_len", "value": args.word_len},
                 {"name": "trials", "value": args.trials},
                 {"name": "seed", "value": args.seed}],
                report.to_dict(), report.summary() + "\n")
    if cmd == "derived-depth":
        report = harness.derived_depth_test(args.n, args.depth, args.trials,
                                            seed=args.seed)
        return ([{"name": "n", "value": args.n}, {"name": "depth", "value": args.depth},
                 {"name": "trials", "value": args.trials},
                 {"name": "seed", "value": args.seed}],
                report.to_dict(), report.summary() + "\n")
    if cmd == "unipotent-test":
        generators = []
        for path in args.derivations:
            generators.extend(parse_derivation_blocks(_read(path)))
        report = harness.unipotent_generation_test(generators, args.word_len,
                                                   args.trials, seed=args.seed)
        return ([{"name": "derivations", "value": path} for path in args.derivations]
                + [{"name": "word_len", "value": args.word_len},
                   {"name": "trials", "value": args.trials},
                   {"name": "seed", "value": args.seed}],
                report.to_dict(), report.summary() + "\n")
    if cmd == "counterexample":
        report = harness.nonconnected_counterexample(args.a, args.b, args.word_len)
        return ([{"name": "a", "value": str(args.a)}, {"name": "b", "value": str(args.b)},
                 {"name": "word_len", "value": args.word_len}],
                report.to_dict(), report.summary() + "\n")
    raise ValueError(f"unknown command {cmd!r}")


def _emit_json(command: str, inputs: list, result, diagnostics: list[str],
               stdout) -> None:
    payload = {"command": command, "inputs": inputs, "result": result,
               "diagnostics": diagnostics}
    print(json.dumps(payload, indent=2), file=stdout)


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse argv, execute, and return the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    wants_json = getattr(args, "json", False)
    try:
        inputs, result, human = _dispatch(args)
    except PropertyViolation as exc:
        if wants_json:
            _emit_json(args.command, [], None, [str(exc)], stdout)
        print(f"property violation: {exc}", file=stderr)
        return 1
    except (ParseError, TriangularityError, ValueError, OSError) as exc:
        if wants_json:
            _emit_json(args.command, [], None, [str(exc)], stdout)
        print(f"error: {exc}", file=stderr)
        return 2
    if wants_json:
        _emit_json(args.command, inputs, result, [], stdout)
    else:
        print(human, end="" if human.endswith("\n") else "\n", file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
