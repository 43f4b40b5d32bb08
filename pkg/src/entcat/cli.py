"""Command-line interface: ``entcat <command> ...``.

Vector arguments are file paths or inline lists such as ``"0.4 0.4 0.1 0.1"``
or ``"1/2,1/4,1/4,0"``.  Exit codes: 0 when the relation holds / the answer
is useful / the suite passes, 1 for the negative answer, 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import catalysis, fixtures, oracle, probabilistic
from .certificates import NotUseful
from .errors import EntcatError
from .majorization import majorizes, pmax, scale, strictly_majorized, strictly_super_majorized, super_majorized
from .report import Report
from .vectors import ProbVector, format_vector, parse_vector, read_vector, tensor, to_fraction

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_vector(arg: str) -> ProbVector:
    path = Path(arg)
    if path.is_file():
        return read_vector(path)
    return parse_vector(arg)


def _rational(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except EntcatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _timed(report: Report, label: str, fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    report.timings[label] = time.perf_counter() - start
    return out


def _attach(report: Report, result) -> Report:
    if isinstance(result, NotUseful):
        report.decision = "not_useful"
        report.messages.append(f"not useful: {result.reason}")
    else:
        report.decision = "useful"
        report.certificate = result
        report.messages.append(f"useful: certificate at d={result.d}")
        if result.catalyst is not None:
            report.messages.append(f"catalyst {format_vector(result.catalyst)}")
        if result.witness is not None:
            report.messages.append(f"witness {format_vector(result.witness)}")
        report.messages.extend(str(i) for i in result.transcript)
        report.values["certificate verified"] = result.verify()
    return report


def cmd_majorize(args) -> Report:
    x, y = load_vector(args.x), load_vector(args.y)
    report = Report("majorize", {"x": x, "y": y})
    lam = args.lam
    relation = args.relation or ("super" if lam is not None else "plain")
    if lam is not None and relation not in ("super", "strict-super"):
        raise UsageError("--lambda applies only to --super and --strict-super")
    if lam is not None:
        if not 0 < lam <= 1:
            raise UsageError(f"--lambda must lie in (0, 1], got {lam}")
        y = scale(y, lam)
        report.values["lambda"] = lam
    fn = {
        "plain": majorizes,
        "strict": strictly_majorized,
        "super": super_majorized,
        "strict-super": strictly_super_majorized,
    }[relation]
    holds = _timed(report, "relation", fn, x, y)
    report.decision = "true" if holds else "false"
    report.values["relation"] = relation
    report.messages.append(f"{relation}: {'holds' if holds else 'does not hold'}")
    return report


def cmd_pmax(args) -> Report:
    x, y = load_vector(args.x), load_vector(args.y)
    report = Report("pmax", {"x": x, "y": y})
    result = _timed(report, "pmax", pmax, x, y)
    report.pmax = result
    report.messages.append(str(result))
    if result.skipped_indices:
        report.messages.append(f"skipped l: {sorted(result.skipped_indices)}")
    return report


def cmd_catalyst_useful(args) -> Report:
    y, c = load_vector(args.y), load_vector(args.c)
    report = Report("catalyst-useful", {"y": y, "c": c})
    if args.prob:
        result = _timed(report, "decide", probabilistic.prob_catalyst_useful, y, c, args.lam or Fraction(1, 2))
    else:
        result = _timed(report, "decide", catalysis.catalyst_useful, y, c)
    return _attach(report, result)


def cmd_k_useful(args) -> Report:
    y = load_vector(args.y)
    report = Report("k-useful", {"y": y})
    report.values["k"] = args.k
    if args.prob:
        result = _timed(report, "decide", probabilistic.prob_k_useful, y, args.k, args.lam or Fraction(1, 2))
    else:
        result = _timed(report, "decide", catalysis.k_useful, y, args.k)
    return _attach(report, result)


def cmd_min_k(args) -> Report:
    y = load_vector(args.y)
    report = Report("min-k", {"y": y})
    fn = probabilistic.prob_min_useful_k if args.prob else catalysis.min_useful_k
    k = _timed(report, "decide", fn, y)
    if k is None:
        report.decision = "not_useful"
        report.values["min k"] = "Never"
        if args.prob:
            report.messages.append("Never: y_2 = y_n, so no catalyst or number of copies helps at any threshold")
        else:
            report.messages.append("Never: every split 1 < d < n-1 has y_d = y_1 or y_(d+1) = y_n")
    else:
        report.decision = "value"
        report.values["min k"] = k
        report.messages.append(f"minimal useful catalyst dimension / number of copies: {k}")
    return report


def cmd_construct(args) -> Report:
    y = load_vector(args.y)
    report = Report("construct", {"y": y})
    report.values.update({"d": args.d, "k": args.k})
    if args.prob:
        c = _timed(report, "construct", probabilistic.construct_prob_catalyst, y, args.d, args.k)
    else:
        c = _timed(report, "construct", catalysis.construct_catalyst, y, args.d, args.k)
        witness = catalysis.kd_witness(y, args.d)
        report.inputs["witness"] = witness
        report.values["witness (x) c strictly majorized"] = strictly_majorized(
            tensor(witness, c), tensor(y, c)
        )
    report.inputs["catalyst"] = c
    report.messages.append(f"catalyst {format_vector(c)}")
    return report


def cmd_decompose(args) -> Report:
    c = load_vector(args.c)
    report = Report("decompose", {"c": c})
    result = _timed(report, "decompose", catalysis.decompose, c, args.alpha)
    report.values["alpha"] = result.alpha
    report.values["blocks"] = list(result.blocks)
    report.values["starts"] = list(result.starts)
    for start, block in zip(result.starts, result.blocks):
        report.messages.append(f"block from {start}: {format_vector(block)}")
    return report


def cmd_examples(args) -> Report:
    if args.name == "yk":
        scenario = fixtures.yk_scenario(args.k or 3)
    else:
        scenario = fixtures.SCENARIOS[args.name]()
    report = Report(f"examples {args.name}", dict(scenario.vectors))
    for label, value in scenario.checks.items():
        report.values[label] = value
        report.messages.append(f"{label}: {value}")
    report.messages.extend(scenario.details)
    return report


def cmd_oracle(args) -> Report:
    report = Report("oracle", decision="pass")
    results = _timed(report, "oracle", oracle.run_suite, args.suite, args.trials, args.seed)
    failures = 0
    for r in results:
        report.messages.append(r.summary())
        report.values[r.lemma_id] = {
            "trials": r.trials,
            "seed": r.seed,
            "skipped": r.skipped,
            "counterexamples": [repr(c) for c in r.counterexamples],
        }
        failures += len(r.counterexamples)
    report.decision = "fail" if failures else "pass"
    return report


def exit_code(report: Report) -> int:
    if report.decision in ("false", "not_useful", "fail"):
        return EXIT_NO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="entcat", description="Exact majorization, catalysis and multiple-copy decisions.")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("majorize", help="test a majorization relation between x and y")
    p.add_argument("x")
    p.add_argument("y")
    group = p.add_mutually_exclusive_group()
    for flag in ("strict", "super", "strict-super"):
        group.add_argument(f"--{flag}", dest="relation", action="store_const", const=flag)
    p.add_argument("--lambda", dest="lam", type=_rational, help="compare against lambda * y")
    p.set_defaults(func=cmd_majorize)

    p = sub.add_parser("pmax", help="maximal probability of converting x into y")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_pmax)

    p = sub.add_parser("catalyst-useful", help="does catalyst c help reach y?")
    p.add_argument("y")
    p.add_argument("c")
    p.add_argument("--prob", action="store_true", help="probabilistic version (any threshold below 1)")
    p.add_argument("--lambda", dest="lam", type=_rational, help="threshold used for the demonstration witness")
    p.set_defaults(func=cmd_catalyst_useful)

    p = sub.add_parser("k-useful", help="does some k-dimensional catalyst (or k copies) help?")
    p.add_argument("y")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prob", action="store_true")
    p.add_argument("--lambda", dest="lam", type=_rational)
    p.set_defaults(func=cmd_k_useful)

    p = sub.add_parser("min-k", help="least useful catalyst dimension / number of copies")
    p.add_argument("y")
    p.add_argument("--prob", action="store_true")
    p.set_defaults(func=cmd_min_k)

    p = sub.add_parser("construct", help="build a geometric catalyst for split d and dimension k")
    p.add_argument("y")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prob", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", help="split c into blocks at ratio alpha")
    p.add_argument("c")
    p.add_argument("--alpha", type=_rational, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("examples", help="run a built-in scenario end to end")
    p.add_argument("name", choices=sorted(fixtures.SCENARIOS))
    p.add_argument("--k", type=int, help="parameter of the yk scenario (default 3)")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("oracle", help="fuzz the lemma checks")
    p.add_argument("--suite", default="all", help=f"one of: all, {', '.join(oracle.SUITES)}")
    p.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return parser


def render(report: Report) -> str:
    lines = [f"{report.command}: {report.decision}"]
    for name, vec in report.inputs.items():
        lines.append(f"  {name} = {format_vector(vec)}")
    lines.extend(f"  {m}" for m in report.messages)
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.func(args)
    except (UsageError, EntcatError, OSError, ValueError, IndexError, KeyError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"entcat: error: {message}", file=sys.stderr)
        return EXIT_INPUT
    print(report.to_json() if args.json else render(report))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
