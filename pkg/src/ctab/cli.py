"""Command-line front end.

    ctab eval --structure s.txt --query "exists x2 . R(x1,x2)"
    ctab check-axioms --model bogus --cases 200
    ctab decompose --map "x1->y1, x2->y1" --dom "x1 x2" --cod "y1"

Exit codes: 0 success (including expected failures of a counterexample
model), 1 usage error, 2 input error, 3 unexpected law failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from ctab.axiomlab.models import BogusDiagonal, DegenerateEmptyBase, Standard
from ctab.axiomlab.runner import check_all
from ctab.axiomlab.laws import REGISTRY
from ctab.core import Base
from ctab.errors import CtabError
from ctab.logic import evaluate, parse
from ctab.mappings import compose, decompose
from ctab.textio import format_table, parse_mapping, parse_structure

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_LAW_FAILURE = 3

DEFAULT_BASES = {"standard": "ab", "bogus": "g"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which we reserve for bad input
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(message: str) -> None:
    print(f"ctab: {message}", file=sys.stderr)


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        with open(args.structure, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        _fail(f"cannot read structure file: {exc}")
        return EXIT_INPUT
    try:
        structure = parse_structure(text)
    except CtabError as exc:
        _fail(f"{args.structure}: {exc}")
        return EXIT_INPUT
    try:
        result = evaluate(parse(args.query), structure)
    except CtabError as exc:
        _fail(f"query: {exc}")
        return EXIT_INPUT
    sys.stdout.write(format_table(result, args.format))
    return EXIT_OK


def _model(name: str, base: str | None):
    if name == "empty-base":
        if base:
            raise UsageError("the empty-base model takes no --base")
        return DegenerateEmptyBase()
    letters = DEFAULT_BASES[name] if base is None else base
    if not letters or len(set(letters)) != len(letters):
        raise UsageError(f"--base needs distinct letters, got {letters!r}")
    elems = Base(tuple(letters))
    if name == "bogus":
        if len(elems) != 1:
            raise UsageError("the bogus model needs a singleton base")
        return BogusDiagonal(elems)
    return Standard(elems)


def cmd_check_axioms(args: argparse.Namespace) -> int:
    if args.law is not None and args.law not in REGISTRY:
        raise UsageError(f"unknown law {args.law!r}; known: {' '.join(REGISTRY)}")
    if args.cases < 1:
        raise UsageError("--cases must be positive")
    model = _model(args.model, args.base)
    laws = None if args.law is None else [args.law]
    report = check_all(model, args.cases, args.seed, laws)
    sys.stdout.write(report.text())
    sys.stdout.write(report.machine_lines())
    return EXIT_OK if report.ok else EXIT_LAW_FAILURE


def _show(label: str, m) -> str:
    body = ", ".join(f"{x}->{y}" for x, y in m.pairs) or "(empty)"
    kind = "identity" if m.dom == m.cod and m.is_inclusion() else ""
    dom = " ".join(v.name for v in sorted(m.dom))
    cod = " ".join(v.name for v in sorted(m.cod))
    line = f"{label}: {{{dom}}} -> {{{cod}}}  {body}"
    return line + (f"  [{kind}]" if kind else "")


def cmd_decompose(args: argparse.Namespace) -> int:
    try:
        lam = parse_mapping(args.map, args.dom, args.cod)
    except CtabError as exc:
        raise UsageError(str(exc)) from exc
    delta, xi, iota = decompose(lam)
    print(_show("lambda", lam))
    print(_show("delta (folding)", delta))
    print(_show("xi (bijection)", xi))
    print(_show("iota (inclusion)", iota))
    ok = (
        delta.is_folding()
        and xi.is_bijection()
        and iota.is_inclusion()
        and compose(iota, compose(xi, delta)) == lam
    )
    print("recomposition iota . xi . delta = lambda:", "verified" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_LAW_FAILURE


def _default_seed() -> int:
    raw = os.environ.get("CTAB_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CTAB_SEED must be an integer, got {raw!r}") from None


def build_parser(default_seed: int = 0) -> argparse.ArgumentParser:
    p = _Parser(prog="ctab", description="Conjunctive table algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a primitive positive formula on a structure")
    e.add_argument("--structure", required=True, help="structure file")
    e.add_argument("--query", required=True, help="formula text")
    e.add_argument("--format", choices=("tsv", "pretty"), default="tsv")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("check-axioms", help="run the law suites on a model")
    c.add_argument("--model", choices=("standard", "bogus", "empty-base"), default="standard")
    c.add_argument("--base", help="base elements, one letter each (default: ab, or g for bogus)")
    c.add_argument("--cases", type=int, default=200)
    c.add_argument("--seed", type=int, default=default_seed, help="default: $CTAB_SEED or 0")
    c.add_argument("--law", help="run a single law, e.g. PS12")
    c.set_defaults(func=cmd_check_axioms)

    d = sub.add_parser("decompose", help="factor a mapping into folding, bijection, inclusion")
    d.add_argument("--map", required=True, help='pairs such as "x1->y1, x2->y1"')
    d.add_argument("--dom", required=True, help="domain variables")
    d.add_argument("--cod", required=True, help="codomain variables")
    d.set_defaults(func=cmd_decompose)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        try:
            args = build_parser(_default_seed()).parse_args(argv)
        except SystemExit as exc:  # --help, or a usage error already reported
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        _fail(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
