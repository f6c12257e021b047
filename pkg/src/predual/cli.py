"""Problem files, sequence literals and the ``predual`` command line.

Problem file grammar (one directive per line, ``#`` starts a comment)::

    space l1
    constraint [r0, r1, ... | tail]
    point [r0, r1, ... | 0]

Rationals are written ``[-]p[/q]``; an empty prefix is ``[| tail]``.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import RationalParseError, parse_rational, render_rational
from .duality import analyze, double_perp, dual_max, gap_witness, condition_holds
from .sampling import random_point
from .seqspace import EcSeq, SpaceTag
from .span import SubspaceKernel

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONDITION_FAILS = 2

MACHINE_KEYS = (
    "space",
    "constraints",
    "point",
    "primal",
    "primal_witness",
    "primal_certified",
    "dual",
    "dual_witness",
    "predual",
    "predual_witness",
    "gap",
    "condition",
    "double_perp_defect",
    "annihilator_dim",
    "preannihilator_dim",
    "window_start",
    "window_max",
)


class ProblemParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_sequence(text: str) -> EcSeq:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"sequence literal must look like [a, b | t], got {text!r}")
    body = s[1:-1]
    if body.count("|") != 1:
        raise ValueError(f"sequence literal needs exactly one '|', got {text!r}")
    head, tail = body.split("|")
    prefix = [] if not head.strip() else [parse_rational(t) for t in head.split(",")]
    return EcSeq(tuple(prefix), parse_rational(tail))


def render_sequence(f: EcSeq, always_fraction: bool = False) -> str:
    items = ", ".join(render_rational(v, always_fraction) for v in f.prefix)
    tail = render_rational(f.tail, always_fraction)
    return f"[{items} | {tail}]" if items else f"[| {tail}]"


@dataclass
class ProblemFile:
    space: SpaceTag
    point: EcSeq
    constraints: list = field(default_factory=list)

    @property
    def subspace(self) -> SubspaceKernel:
        return SubspaceKernel.of(self.constraints)


def parse_problem(text: str) -> ProblemFile:
    space = point = None
    constraints = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "space":
            if space is not None:
                raise ProblemParseError("duplicate space line", lineno)
            try:
                space = SpaceTag(rest.lower())
            except ValueError:
                raise ProblemParseError(f"unknown space {rest!r}", lineno) from None
            if space is not SpaceTag.L1:
                raise ProblemParseError(f"only 'l1' is supported as the primal space, got {rest!r}", lineno)
        elif keyword in ("constraint", "point"):
            try:
                seq = parse_sequence(rest)
            except (ValueError, RationalParseError) as exc:
                raise ProblemParseError(f"malformed sequence: {exc}", lineno) from None
            if keyword == "constraint":
                constraints.append(seq)
            else:
                if point is not None:
                    raise ProblemParseError("duplicate point line", lineno)
                if seq.tail != 0:
                    raise ProblemParseError("point not in l1: its tail must be 0", lineno)
                point = seq
        else:
            raise ProblemParseError(f"unknown keyword {keyword!r}", lineno)
    if space is None:
        raise ProblemParseError("missing 'space' line")
    if point is None:
        raise ProblemParseError("missing 'point' line")
    return ProblemFile(space, point, constraints)


def render_problem(prob: ProblemFile) -> str:
    lines = [f"space {prob.space.value}"]
    lines += [f"constraint {render_sequence(g)}" for g in prob.constraints]
    lines.append(f"point {render_sequence(prob.point)}")
    return "\n".join(lines) + "\n"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def report_fields(prob: ProblemFile, report) -> dict:
    r = lambda v: render_rational(v, always_fraction=True)  # noqa: E731
    seq = lambda f: render_sequence(f, always_fraction=True)  # noqa: E731
    return {
        "space": prob.space.value,
        "constraints": str(len(prob.constraints)),
        "point": seq(prob.point),
        "primal": r(report.primal_value),
        "primal_witness": seq(report.primal_witness),
        "primal_certified": _bool(report.primal_certified),
        "dual": r(report.dual_value),
        "dual_witness": seq(report.dual_witness),
        "predual": r(report.predual_value),
        "predual_witness": seq(report.predual_witness),
        "gap": r(report.gap),
        "condition": _bool(report.condition_holds),
        "double_perp_defect": str(report.double_perp_defect),
        "annihilator_dim": str(report.annihilator_dim),
        "preannihilator_dim": str(report.pre_annihilator_dim),
        "window_start": str(report.window_start),
        "window_max": str(report.window_max),
    }


def render_text(report) -> str:
    rr = render_rational
    cert = "certified" if report.primal_certified else "NOT certified"
    lines = [
        f"primal min  ||y - x||_1, x in S     = {rr(report.primal_value)}",
        f"  witness x* ({cert})              {render_sequence(report.primal_witness)}",
        f"dual max over S^perp                = {rr(report.dual_value)}",
        f"  witness lambda*                    {render_sequence(report.dual_witness)}",
        f"predual sup over pre-annihilator    = {rr(report.predual_value)}",
        f"  witness nu*                        {render_sequence(report.predual_witness)}",
        f"gap                                 = {rr(report.gap)}",
        f"(^perp S)^perp = S                  : {_bool(report.condition_holds)}"
        f"  (dim S^perp = {report.annihilator_dim}, dim ^perp S = {report.pre_annihilator_dim})",
    ]
    return "\n".join(lines)


def _load(path: str) -> ProblemFile:
    if path == "-":
        return parse_problem(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def cmd_analyze(args) -> int:
    prob = _load(args.file)
    report = analyze(prob.point, prob.subspace, args.window_start, args.window_max)
    if args.format == "machine":
        for key, value in report_fields(prob, report).items():
            print(f"{key}={value}")
    else:
        print(render_text(report))
    return EXIT_OK


def cmd_witness(args) -> int:
    prob = _load(args.file)
    y = gap_witness(prob.subspace, args.window_max)
    print("condition holds" if y is None else render_sequence(y))
    return EXIT_OK


def cmd_check(args) -> int:
    prob = _load(args.file)
    holds = condition_holds(prob.subspace)
    print(f"condition={_bool(holds)}")
    return EXIT_OK if holds else EXIT_CONDITION_FAILS


def cmd_verify(args) -> int:
    prob = _load(args.file)
    S = prob.subspace
    P = double_perp(S)
    rng = random.Random(args.seed)
    max_prefix = max(6, S.n_classes)
    thm1 = chain = 0
    for _ in range(args.samples):
        y = random_point(rng, max_prefix)
        rep = analyze(y, S)
        thm1 += rep.primal_value == rep.dual_value
        chain += rep.predual_value == dual_max(y, P)[0] and rep.predual_value <= rep.primal_value
    print(f"samples={args.samples}")
    print(f"seed={args.seed}")
    print(f"theorem1_equal={thm1}/{args.samples}")
    print(f"full_chain={chain}/{args.samples}")
    ok = thm1 == chain == args.samples
    print(f"result={'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_CONDITION_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="predual",
        description="Exact minimum-distance duality for kernel subspaces of l1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="primal, dual and predual values with witnesses")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--window-start", type=int, default=None)
    p.add_argument("--window-max", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("witness", help="a point with a strictly positive duality gap")
    p.add_argument("file")
    p.add_argument("--window-max", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="exit 0 if (^perp S)^perp = S, 2 otherwise")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="check the duality relations on random points")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"predual: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
