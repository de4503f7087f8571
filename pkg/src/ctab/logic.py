"""Primitive positive formulas: syntax, parsing and evaluation.

Grammar (``exists`` binds weakest, ``&`` is left-associative)::

    formula := "exists" var {"," var} "." formula | conj
    conj    := atom {"&" atom}
    atom    := "true" | "false" | var "=" var
             | ident "(" var {"," var} ")" | "(" formula ")"

Two evaluators are provided. :func:`evaluate` compiles the formula to table
operations (equality tables, joins, deletions). :func:`evaluate_oracle`
enumerates assignments and checks satisfaction directly; it is the
reference the compiled route is tested against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from ctab.algebra import TableAlgebra, delete, join
from ctab.core import EMPTY, UNIT, Structure, Table, Value, Variable, var
from ctab.errors import EvaluationError, ParseError


@dataclass(frozen=True)
class RelAtom:
    name: str
    args: tuple[Variable, ...]


@dataclass(frozen=True)
class Eq:
    left: Variable
    right: Variable


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Variable
    body: "Formula"


@dataclass(frozen=True)
class Truth:
    pass


@dataclass(frozen=True)
class Falsity:
    pass


TRUE = Truth()
FALSE = Falsity()

Formula = Union[RelAtom, Eq, And, Exists, Truth, Falsity]


def free_vars(phi: Formula) -> frozenset[Variable]:
    if isinstance(phi, RelAtom):
        return frozenset(phi.args)
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, And):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, Exists):
        return free_vars(phi.body) - {phi.var}
    return frozenset()


# -- printing ---------------------------------------------------------------

def format_formula(phi: Formula) -> str:
    """Canonical text; ``parse(format_formula(phi)) == phi``."""
    if isinstance(phi, Exists):
        return f"exists {phi.var.name} . {format_formula(phi.body)}"
    return _format_conj(phi)


def _format_conj(phi: Formula) -> str:
    if isinstance(phi, And):
        return f"{_format_conj(phi.left)} & {_format_atom(phi.right)}"
    return _format_atom(phi)


def _format_atom(phi: Formula) -> str:
    if isinstance(phi, Truth):
        return "true"
    if isinstance(phi, Falsity):
        return "false"
    if isinstance(phi, Eq):
        return f"{phi.left.name} = {phi.right.name}"
    if isinstance(phi, RelAtom):
        return f"{phi.name}(" + ",".join(a.name for a in phi.args) + ")"
    return "(" + format_formula(phi) + ")"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([=&(),.]))")
_KEYWORDS = {"exists", "true", "false"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "ident", a punctuation character, or "eof"
    text: str
    pos: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if not m:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            toks.append(_Tok("ident", m.group(1), start))
        else:
            toks.append(_Tok(m.group(2), m.group(2), start))
        pos = m.end()
    toks.append(_Tok("eof", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def expect(self, kind: str) -> _Tok:
        t = self.tok
        if t.kind != kind:
            found = t.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", t.pos)
        self.i += 1
        return t

    def variable(self) -> Variable:
        t = self.expect("ident")
        if t.text in _KEYWORDS:
            raise ParseError(f"keyword {t.text!r} used as a variable", t.pos)
        return var(t.text)

    def formula(self) -> Formula:
        if self.tok.kind == "ident" and self.tok.text == "exists":
            self.i += 1
            bound = [self.variable()]
            while self.tok.kind == ",":
                self.i += 1
                bound.append(self.variable())
            self.expect(".")
            body = self.formula()
            for v in reversed(bound):
                body = Exists(v, body)
            return body
        return self.conj()

    def conj(self) -> Formula:
        phi = self.atom()
        while self.tok.kind == "&":
            self.i += 1
            phi = And(phi, self.atom())
        return phi

    def atom(self) -> Formula:
        t = self.tok
        if t.kind == "(":
            self.i += 1
            phi = self.formula()
            self.expect(")")
            return phi
        if t.kind != "ident":
            raise ParseError(f"expected an atom, found {t.text or 'end of input'!r}", t.pos)
        if t.text == "true":
            self.i += 1
            return TRUE
        if t.text == "false":
            self.i += 1
            return FALSE
        if t.text == "exists":
            raise ParseError("'exists' inside a conjunction must be parenthesized", t.pos)
        nxt = self.toks[self.i + 1]
        if nxt.kind == "(":
            self.i += 2
            args = [self.variable()]
            while self.tok.kind == ",":
                self.i += 1
                args.append(self.variable())
            self.expect(")")
            return RelAtom(t.text, tuple(args))
        left = self.variable()
        self.expect("=")
        return Eq(left, self.variable())


def parse(src: str) -> Formula:
    p = _Parser(src)
    phi = p.formula()
    if p.tok.kind != "eof":
        raise ParseError(f"unexpected {p.tok.text!r} after formula", p.tok.pos)
    return phi


# -- evaluation -------------------------------------------------------------

def _relation(structure: Structure, atom: RelAtom):
    rel = structure.relations.get(atom.name)
    if rel is None:
        raise EvaluationError(f"unknown relation in atom {_format_atom(atom)}")
    if rel.arity != len(atom.args):
        raise EvaluationError(
            f"atom {_format_atom(atom)} has {len(atom.args)} arguments, "
            f"relation {atom.name} has arity {rel.arity}"
        )
    return rel


def relation_table(atom: RelAtom, structure: Structure) -> Table:
    """Named table of an atom: one column per distinct argument variable.

    A positional tuple contributes a row only if repeated variables receive
    equal values in it.
    """
    rel = _relation(structure, atom)
    cols = tuple(sorted(set(atom.args)))
    rows = []
    for tup in rel.tuples:
        row: dict[Variable, Value] = {}
        if all(row.setdefault(x, g) == g for x, g in zip(atom.args, tup)):
            rows.append(tuple(row[c] for c in cols))
    return Table(cols, rows)


def evaluate(phi: Formula, structure: Structure, alg: TableAlgebra | None = None) -> Table:
    """Result table of ``phi`` computed by compilation to table operations."""
    if alg is None:
        alg = TableAlgebra(structure.base)
    elif alg.base != structure.base:
        raise EvaluationError(f"algebra base {alg.base!r} differs from structure base {structure.base!r}")
    return _compile(phi, structure, alg)


def _compile(phi: Formula, structure: Structure, alg: TableAlgebra) -> Table:
    if isinstance(phi, Eq):
        return alg.equality_table(phi.left, phi.right)
    if isinstance(phi, And):
        return join(_compile(phi.left, structure, alg), _compile(phi.right, structure, alg))
    if isinstance(phi, Exists):
        return delete(phi.var, _compile(phi.body, structure, alg))
    if isinstance(phi, RelAtom):
        return relation_table(phi, structure)
    if isinstance(phi, Truth):
        return UNIT
    if isinstance(phi, Falsity):
        return EMPTY
    raise TypeError(f"not a formula: {phi!r}")


def satisfies(structure: Structure, phi: Formula, assignment: dict[Variable, Value]) -> bool:
    """Tarskian satisfaction of ``phi`` under an assignment covering its free variables."""
    if isinstance(phi, Truth):
        return True
    if isinstance(phi, Falsity):
        return False
    if isinstance(phi, Eq):
        return assignment[phi.left] == assignment[phi.right]
    if isinstance(phi, RelAtom):
        rel = _relation(structure, phi)
        return tuple(assignment[a] for a in phi.args) in rel.tuples
    if isinstance(phi, And):
        return satisfies(structure, phi.left, assignment) and satisfies(structure, phi.right, assignment)
    if isinstance(phi, Exists):
        inner = dict(assignment)
        for g in structure.base:
            inner[phi.var] = g
            if satisfies(structure, phi.body, inner):
                return True
        return False
    raise TypeError(f"not a formula: {phi!r}")


def _check_atoms(phi: Formula, structure: Structure) -> None:
    for sub in subformulas(phi):
        if isinstance(sub, RelAtom):
            _relation(structure, sub)


def evaluate_oracle(phi: Formula, structure: Structure) -> Table:
    """Result table by enumerating every assignment of the free variables."""
    _check_atoms(phi, structure)
    cols = tuple(sorted(free_vars(phi)))
    rows = []
    for values in product(structure.base.elems, repeat=len(cols)):
        if satisfies(structure, phi, dict(zip(cols, values))):
            rows.append(values)
    return Table(cols, rows)


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, And):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, Exists):
        yield from subformulas(phi.body)
