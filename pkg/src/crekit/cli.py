"""Command-line front end.

Every subcommand prints a text verdict by default or a JSON envelope with
``--format json``; the envelope always has the four fields ``verdict``,
``witness``, ``error`` and ``report``.  Exit status: 0 when the decided
predicate is true (or the command simply succeeded), 1 when it is false,
2 for usage and syntax errors, 3 when a resource limit was exceeded.

Expressions may be given inline or as ``@path`` to read from a file; words
use the space-separated symbol serialization with ``%`` for the empty word.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .decision import DEFAULT_STATE_BUDGET, equivalent, includes, overlaps
from .engine import (
    DEFAULT_EXPANSION_CAP,
    DEFAULT_WORD_LIMIT,
    enumerate_words,
    length_set,
    member,
    parse_word,
    render_word,
)
from .errors import CrekitError
from .partition import (
    TheoremReport,
    build_expressions,
    decide_partition_via_inclusion,
    even_total_instances,
    parse_weights,
    verify_theorem_instance,
)
from .syntax import parse_expr, render_expr
from .unambiguity import check_unambiguous

ENV_EXPANSION_CAP = "CREKIT_EXPANSION_CAP"

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

_RESOURCE_CODES = {"EXPANSION_CAP", "STATE_BUDGET", "RESULT_TOO_LARGE"}


@dataclass(frozen=True)
class CliConfig:
    expansion_cap: int = DEFAULT_EXPANSION_CAP
    state_budget: int = DEFAULT_STATE_BUDGET
    output_format: str = "text"
    enum_word_limit: int = DEFAULT_WORD_LIMIT

    def __post_init__(self):
        for name in ("expansion_cap", "state_budget", "enum_word_limit"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        cap = args.cap
        if cap is None:
            env = os.environ.get(ENV_EXPANSION_CAP)
            cap = int(env) if env else DEFAULT_EXPANSION_CAP
        return cls(
            expansion_cap=cap,
            state_budget=args.budget if args.budget is not None else DEFAULT_STATE_BUDGET,
            output_format=args.format,
            enum_word_limit=args.limit if args.limit is not None else DEFAULT_WORD_LIMIT,
        )


def _envelope(verdict=False, witness=None, error=None, report=None) -> dict:
    return {
        "verdict": verdict,
        "witness": list(witness) if witness is not None else None,
        "error": error,
        "report": report,
    }


class _Output:
    """Collects text lines and the JSON envelope; emits one of them."""

    def __init__(self, config: CliConfig):
        self.config = config
        self.lines: list[str] = []
        self.envelope = _envelope()
        self.streamed = False  # verify-suite prints as it goes

    def text(self, line: str):
        self.lines.append(line)

    def emit(self):
        if self.streamed:
            return
        if self.config.output_format == "json":
            print(json.dumps(self.envelope))
        else:
            for line in self.lines:
                print(line)


def _read_arg(value: str) -> str:
    """Inline argument, or @path indirection."""
    if value.startswith("@"):
        with open(value[1:], "r", encoding="utf-8") as handle:
            return handle.read()
    return value


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _conflict_dict(conflict) -> dict | None:
    if conflict is None:
        return None
    return {
        "symbol": conflict.symbol,
        "positions": list(conflict.positions),
        "locus": "first-set"
        if conflict.locus_kind == "first-set"
        else f"follow-set of {conflict.locus_position}",
    }


def _report_dict(report: TheoremReport) -> dict:
    inst = report.instance
    return {
        "weights": list(inst.weights),
        "k": inst.k,
        "total": inst.total,
        "n": inst.n,
        "e1": render_expr(report.e1),
        "e2": render_expr(report.e2),
        "partition_exists": report.partition_exists,
        "partition_witness": list(report.partition_witness)
        if report.partition_witness is not None
        else None,
        "inclusion_holds": report.inclusion_holds,
        "inclusion_witness": list(report.inclusion_witness)
        if report.inclusion_witness is not None
        else None,
        "unambiguity_ok": list(report.unambiguity_ok),
        "length_laws_ok": report.length_laws_ok,
        "theorem_holds": report.theorem_holds,
    }


def _report_line(report: TheoremReport) -> str:
    witness_len = (
        str(len(report.inclusion_witness))
        if report.inclusion_witness is not None
        else "-"
    )
    return (
        f"weights={','.join(map(str, report.instance.weights))}"
        f" n={report.instance.n}"
        f" partition={'yes' if report.partition_exists else 'no'}"
        f" inclusion={'holds' if report.inclusion_holds else 'fails'}"
        f" witness_len={witness_len}"
        f" unambiguous={'ok' if all(report.unambiguity_ok) else 'FAIL'}"
        f" lengths={'ok' if report.length_laws_ok else 'FAIL'}"
        f" theorem={'ok' if report.theorem_holds else 'MISMATCH'}"
    )


# --- subcommand handlers -----------------------------------------------------


def _cmd_parse(args, config: CliConfig, out: _Output) -> int:
    expr = parse_expr(_read_arg(args.expr))
    rendered = render_expr(expr)
    out.text(rendered)
    out.envelope = _envelope(verdict=True, report={"expr": rendered})
    return EXIT_TRUE


def _cmd_member(args, config: CliConfig, out: _Output) -> int:
    expr = parse_expr(_read_arg(args.expr))
    word = parse_word(_read_arg(args.word))
    ok = member(expr, word, cap=config.expansion_cap)
    out.text("true" if ok else "false")
    out.envelope = _envelope(verdict=ok)
    return EXIT_TRUE if ok else EXIT_FALSE


def _cmd_enumerate(args, config: CliConfig, out: _Output) -> int:
    expr = parse_expr(_read_arg(args.expr))
    words = enumerate_words(
        expr,
        args.maxlen,
        cap=config.expansion_cap,
        word_limit=config.enum_word_limit,
    )
    for word in words:
        out.text(render_word(word))
    out.envelope = _envelope(verdict=True, report={"words": [list(w) for w in words]})
    return EXIT_TRUE


def _cmd_lengths(args, config: CliConfig, out: _Output) -> int:
    expr = parse_expr(_read_arg(args.expr))
    lengths = length_set(expr, args.cutoff)
    members = sorted(lengths.members)
    line = " ".join(map(str, members)) if members else "(none)"
    if lengths.saturated:
        line += " (saturated)"
    out.text(line)
    out.envelope = _envelope(
        verdict=True, report={"members": members, "saturated": lengths.saturated}
    )
    return EXIT_TRUE


def _cmd_unambiguous(args, config: CliConfig, out: _Output) -> int:
    expr = parse_expr(_read_arg(args.expr))
    verdict = check_unambiguous(expr)
    if verdict.unambiguous:
        out.text("unambiguous")
    else:
        out.text(f"ambiguous: {verdict.conflict.describe()}")
    out.envelope = _envelope(
        verdict=verdict.unambiguous,
        report={"conflict": _conflict_dict(verdict.conflict)},
    )
    return EXIT_TRUE if verdict.unambiguous else EXIT_FALSE


def _cmd_include(args, config: CliConfig, out: _Output) -> int:
    left = parse_expr(_read_arg(args.left))
    right = parse_expr(_read_arg(args.right))
    verdict = includes(
        left, right, cap=config.expansion_cap, state_budget=config.state_budget
    )
    if verdict.holds:
        out.text("holds")
    else:
        out.text("fails")
        out.text(f"witness: {render_word(verdict.witness)}")
    out.envelope = _envelope(verdict=verdict.holds, witness=verdict.witness)
    return EXIT_TRUE if verdict.holds else EXIT_FALSE


def _cmd_overlap(args, config: CliConfig, out: _Output) -> int:
    left = parse_expr(_read_arg(args.left))
    right = parse_expr(_read_arg(args.right))
    verdict = overlaps(left, right, cap=config.expansion_cap)
    if verdict.overlaps:
        out.text("overlaps")
        out.text(f"witness: {render_word(verdict.witness)}")
    else:
        out.text("disjoint")
    out.envelope = _envelope(verdict=verdict.overlaps, witness=verdict.witness)
    return EXIT_TRUE if verdict.overlaps else EXIT_FALSE


def _cmd_equiv(args, config: CliConfig, out: _Output) -> int:
    left = parse_expr(_read_arg(args.left))
    right = parse_expr(_read_arg(args.right))
    verdict = equivalent(
        left, right, cap=config.expansion_cap, state_budget=config.state_budget
    )
    if verdict.equivalent:
        out.text("equivalent")
    else:
        out.text("not equivalent")
        out.text(
            f"witness: {render_word(verdict.witness)} (only in the {verdict.side} language)"
        )
    out.envelope = _envelope(verdict=verdict.equivalent, witness=verdict.witness)
    if verdict.side is not None:
        out.envelope["report"] = {"side": verdict.side}
    return EXIT_TRUE if verdict.equivalent else EXIT_FALSE


def _cmd_reduce(args, config: CliConfig, out: _Output) -> int:
    inst = parse_weights(_read_file(args.weights_file))
    e1, e2 = build_expressions(inst)
    out.text(render_expr(e1))
    out.text(render_expr(e2))
    out.envelope = _envelope(
        verdict=True, report={"e1": render_expr(e1), "e2": render_expr(e2)}
    )
    return EXIT_TRUE


def _cmd_partition(args, config: CliConfig, out: _Output) -> int:
    inst = parse_weights(_read_file(args.weights_file))
    exists = decide_partition_via_inclusion(
        inst, cap=config.expansion_cap, state_budget=config.state_budget
    )
    out.text("yes" if exists else "no")
    out.envelope = _envelope(verdict=exists)
    return EXIT_TRUE if exists else EXIT_FALSE


def _cmd_verify(args, config: CliConfig, out: _Output) -> int:
    inst = parse_weights(_read_file(args.weights_file))
    report = verify_theorem_instance(
        inst, cap=config.expansion_cap, state_budget=config.state_budget
    )
    out.text(_report_line(report))
    if report.inclusion_witness is not None:
        out.text(f"witness: {render_word(report.inclusion_witness)}")
    out.envelope = _envelope(
        verdict=report.all_checks_pass,
        witness=report.inclusion_witness,
        report=_report_dict(report),
    )
    return EXIT_TRUE if report.all_checks_pass else EXIT_FALSE


def _cmd_verify_suite(args, config: CliConfig, out: _Output) -> int:
    out.streamed = True
    checked = 0
    mismatches = 0
    for inst in even_total_instances(args.kmax, args.wmax):
        report = verify_theorem_instance(
            inst, cap=config.expansion_cap, state_budget=config.state_budget
        )
        checked += 1
        if not report.all_checks_pass:
            mismatches += 1
        # stream one line per instance so partial progress survives interruption
        if config.output_format == "json":
            print(
                json.dumps(
                    _envelope(
                        verdict=report.all_checks_pass, report=_report_dict(report)
                    )
                ),
                flush=True,
            )
        else:
            print(_report_line(report), flush=True)
    summary = f"checked {checked} instances, {mismatches} mismatches"
    print(summary, file=sys.stderr)
    return EXIT_TRUE if mismatches == 0 else EXIT_FALSE


# --- argument parsing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, metavar="N", help="expansion node cap")
    common.add_argument("--budget", type=int, metavar="N", help="product-state budget")
    common.add_argument("--limit", type=int, metavar="N", help="enumeration word limit")
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="crekit",
        description="Counted regular expressions: semantics, unambiguity, "
        "inclusion, and PARTITION via inclusion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse and re-render")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_parse)

    p = sub.add_parser("member", parents=[common], help="word membership")
    p.add_argument("expr")
    p.add_argument("word")
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("enumerate", parents=[common], help="list words up to a length")
    p.add_argument("expr")
    p.add_argument("maxlen", type=int)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("lengths", parents=[common], help="word lengths up to a cutoff")
    p.add_argument("expr")
    p.add_argument("cutoff", type=int)
    p.set_defaults(handler=_cmd_lengths)

    p = sub.add_parser("unambiguous", parents=[common], help="weak unambiguity check")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_unambiguous)

    p = sub.add_parser("include", parents=[common], help="language inclusion")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_include)

    p = sub.add_parser("overlap", parents=[common], help="language overlap")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_overlap)

    p = sub.add_parser("equiv", parents=[common], help="language equivalence")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("reduce", parents=[common], help="print E1 and E2 for weights")
    p.add_argument("weights_file")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser(
        "partition", parents=[common], help="decide PARTITION via inclusion"
    )
    p.add_argument("weights_file")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("verify", parents=[common], help="verify one instance")
    p.add_argument("weights_file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "verify-suite", parents=[common], help="verify all small instances"
    )
    p.add_argument("kmax", type=int)
    p.add_argument("wmax", type=int)
    p.set_defaults(handler=_cmd_verify_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig.from_args(args)
    except ValueError as exc:
        print(f"error[USAGE]: {exc}", file=sys.stderr)
        return EXIT_USAGE

    out = _Output(config)
    try:
        status = args.handler(args, config, out)
    except CrekitError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        if config.output_format == "json":
            print(
                json.dumps(
                    _envelope(error={"code": exc.code, "message": str(exc)})
                )
            )
        return EXIT_RESOURCE if exc.code in _RESOURCE_CODES else EXIT_USAGE
    except OSError as exc:
        print(f"error[USAGE]: {exc}", file=sys.stderr)
        if config.output_format == "json":
            print(json.dumps(_envelope(error={"code": "USAGE", "message": str(exc)})))
        return EXIT_USAGE
    out.emit()
    return status


if __name__ == "__main__":
    sys.exit(main())
