"""Text formats: structure files, rendered tables and mapping specifications.

Structure file (line oriented, ``#`` starts a comment)::

    base: a b c
    rel R/2: (a,b) (b,c)

Table TSV format: a header line with the column names in enumeration order,
then one tab-separated line per row. The empty table is the single line
``EMPTY schema=*`` and the table holding only the empty tuple is the single
line ``()``.
"""

from __future__ import annotations

import re

from ctab.core import EMPTY, UNIT, Base, Relation, Structure, Table, Variable, var, variables
from ctab.errors import ConstructionError, ParseError
from ctab.mappings import Mapping

EMPTY_MARKER = "EMPTY schema=*"
UNIT_MARKER = "()"

_VALUE = r"[^\s(),#]+"
_TUPLE = re.compile(r"\(\s*((?:" + _VALUE + r")(?:\s*,\s*" + _VALUE + r")*)?\s*\)")
_REL_HEAD = re.compile(r"rel\s+([A-Za-z_][A-Za-z0-9_]*)\s*/\s*([0-9]+)\s*:(.*)\Z")


def parse_structure(text: str) -> Structure:
    base: Base | None = None
    relations: dict[str, Relation] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("base:"):
            if base is not None:
                raise ParseError("base declared twice", line=lineno)
            elems = line[len("base:"):].split()
            if len(set(elems)) != len(elems):
                raise ParseError(f"duplicate values in base: {elems}", line=lineno)
            base = Base(tuple(elems))
            continue
        m = _REL_HEAD.match(line)
        if not m:
            raise ParseError(f"cannot parse {line!r}", line=lineno)
        if base is None:
            raise ParseError("relation declared before the base", line=lineno)
        name, arity, rest = m.group(1), int(m.group(2)), m.group(3)
        if name in relations:
            raise ParseError(f"relation {name} declared twice", line=lineno)
        tuples = set()
        pos = 0
        rest = rest.strip()
        while pos < len(rest):
            tm = _TUPLE.match(rest, pos)
            if not tm:
                raise ParseError(f"malformed tuple near {rest[pos:]!r}", line=lineno)
            inner = tm.group(1)
            tup = tuple(v.strip() for v in inner.split(",")) if inner else ()
            if len(tup) != arity:
                raise ParseError(f"tuple {tup} does not have arity {arity} of {name}", line=lineno)
            bad = [v for v in tup if v not in base]
            if bad:
                raise ParseError(f"values {bad} of relation {name} are not in the base", line=lineno)
            tuples.add(tup)
            pos = tm.end()
            while pos < len(rest) and rest[pos].isspace():
                pos += 1
        relations[name] = Relation(arity, frozenset(tuples))
    if base is None:
        raise ParseError("no base declared")
    return Structure(base, relations)


def format_structure(structure: Structure) -> str:
    lines = ["base: " + " ".join(structure.base)]
    for name in sorted(structure.relations):
        rel = structure.relations[name]
        tuples = " ".join("(" + ",".join(t) + ")" for t in sorted(rel.tuples))
        lines.append(f"rel {name}/{rel.arity}: {tuples}".rstrip())
    return "\n".join(lines) + "\n"


def format_table(table: Table, fmt: str = "tsv") -> str:
    if fmt == "tsv":
        return _format_tsv(table)
    if fmt == "pretty":
        return _format_pretty(table)
    raise ValueError(f"unknown table format {fmt!r}")


def _format_tsv(table: Table) -> str:
    if table.is_empty:
        return EMPTY_MARKER + "\n"
    if not table.columns:
        return UNIT_MARKER + "\n"
    lines = ["\t".join(c.name for c in table.columns)]
    lines += ["\t".join(r) for r in table.rows]
    return "\n".join(lines) + "\n"


def _format_pretty(table: Table) -> str:
    if table.is_empty:
        return EMPTY_MARKER + "\n"
    if not table.columns:
        return UNIT_MARKER + "\n"
    head = [c.name for c in table.columns]
    widths = [max([len(h)] + [len(r[i]) for r in table.rows]) for i, h in enumerate(head)]

    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"

    rule = "+-" + "-+-".join("-" * w for w in widths) + "-+"
    out = [rule, line(head), rule] + [line(r) for r in table.rows] + [rule]
    out.append(f"({len(table.rows)} row{'s' if len(table.rows) != 1 else ''})")
    return "\n".join(out) + "\n"


def parse_table(text: str) -> Table:
    """Inverse of the TSV rendering."""
    lines = text.splitlines()
    if lines == [EMPTY_MARKER]:
        return EMPTY
    if lines == [UNIT_MARKER]:
        return UNIT
    if not lines:
        raise ParseError("empty table text")
    cols = [var(n) for n in lines[0].split("\t")]
    rows = []
    for i, ln in enumerate(lines[1:], start=2):
        cells = tuple(ln.split("\t"))
        if len(cells) != len(cols):
            raise ParseError(f"row has {len(cells)} cells, header has {len(cols)}", line=i)
        rows.append(cells)
    if not rows:
        raise ParseError("a table with columns needs at least one row")
    try:
        return Table.from_positional(cols, rows)
    except ConstructionError as exc:
        raise ParseError(str(exc)) from exc


def parse_mapping(pairs: str, dom: str, cod: str) -> Mapping:
    """``parse_mapping("x1->y1, x2->y1", "x1 x2", "y1")``."""
    graph: dict[Variable, Variable] = {}
    for item in filter(None, (p.strip() for p in pairs.split(","))):
        if "->" not in item:
            raise ParseError(f"expected 'x->y', got {item!r}")
        left, right = (s.strip() for s in item.split("->", 1))
        if not left or not right:
            raise ParseError(f"expected 'x->y', got {item!r}")
        x, y = var(left), var(right)
        if x in graph and graph[x] != y:
            raise ParseError(f"{x} is mapped twice")
        graph[x] = y
    try:
        return Mapping(graph, cod=variables(cod), dom=variables(dom))
    except ConstructionError as exc:
        raise ParseError(str(exc)) from exc
