"""Value types: variables, named tuples, tables and relational structures.

Every type here is immutable. Tables are kept in a canonical form (sorted
columns, deduplicated and sorted rows) so that ``==`` on tables is set
equality of rows plus equality of schemas.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from ctab.errors import ConstructionError, DomainError

Value = str

_INDEXED_NAME = re.compile(r"x([1-9][0-9]*)\Z")
# ids handed out to names outside the x1, x2, ... family
_CUSTOM_ID_START = 1_000_000


class _VariableRegistry:
    """Bijective name <-> id interning.

    ``x<n>`` always denotes the n-th variable of the enumeration. Any other
    name receives the next free id at or above ``_CUSTOM_ID_START``.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._by_name: dict[str, int] = {}
        self._by_id: dict[int, str] = {}
        self._next_custom = _CUSTOM_ID_START

    def intern(self, name: str) -> int:
        with self._lock:
            if name in self._by_name:
                return self._by_name[name]
            m = _INDEXED_NAME.match(name)
            if m:
                ident = int(m.group(1))
                if ident in self._by_id:
                    raise ConstructionError(
                        f"variable name {name!r} clashes with {self._by_id[ident]!r}"
                    )
            else:
                while self._next_custom in self._by_id:
                    self._next_custom += 1
                ident = self._next_custom
                self._next_custom += 1
            self._by_name[name] = ident
            self._by_id[ident] = name
            return ident

    def name_of(self, ident: int) -> str:
        with self._lock:
            return self._by_id.get(ident, f"x{ident}")


_registry = _VariableRegistry()


@dataclass(frozen=True, order=True)
class Variable:
    """A variable of the fixed enumeration x1, x2, x3, ...

    Identity and order are given by ``id`` alone; ``name`` is for display.
    """

    id: int
    name: str = field(default="", compare=False, hash=False)

    def __post_init__(self) -> None:
        if not isinstance(self.id, int) or self.id < 1:
            raise ConstructionError(f"variable id must be a positive integer, got {self.id!r}")
        if not self.name:
            object.__setattr__(self, "name", _registry.name_of(self.id))

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__


def var(name: str) -> Variable:
    """Intern ``name`` and return its variable."""
    return Variable(_registry.intern(name), name)


def variables(names: str | Iterable[str]) -> tuple[Variable, ...]:
    """``variables("x1 x2")`` -> (x1, x2); commas and whitespace both separate."""
    if isinstance(names, str):
        names = [n for n in re.split(r"[\s,]+", names) if n]
    return tuple(var(n) for n in names)


def fresh_variables(avoid: Iterable[Variable], count: int, skip: int = 0) -> list[Variable]:
    """The ``count`` smallest-id variables not in ``avoid``, after skipping ``skip`` of them."""
    taken = {v.id for v in avoid}
    out: list[Variable] = []
    ident = 0
    while len(out) < count:
        ident += 1
        if ident in taken:
            continue
        if skip:
            skip -= 1
            continue
        out.append(Variable(ident))
    return out


class _AllVariables:
    """Schema marker for the empty table: the (infinite) set of all variables."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __contains__(self, item: object) -> bool:
        return isinstance(item, Variable)

    def issuperset(self, other: Iterable[Variable]) -> bool:
        return True

    def __repr__(self) -> str:
        return "*"

    def __reduce__(self):
        return (_AllVariables, ())


ALL_VARIABLES = _AllVariables()

Schema = "frozenset[Variable] | _AllVariables"


@dataclass(frozen=True)
class Base:
    """A finite, duplicate-free, ordered set of values (possibly empty)."""

    elems: tuple[Value, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(sorted(set(self.elems))))

    @classmethod
    def of(cls, *elems: Value) -> Base:
        return cls(tuple(elems))

    def __iter__(self) -> Iterator[Value]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, item: object) -> bool:
        return item in self.elems

    def __repr__(self) -> str:
        return "{" + ",".join(self.elems) + "}"


class NamedTuple:
    """A finite map from variables to values: one row of a table.

    >>> x1, x2 = variables("x1 x2")
    >>> NamedTuple({x2: "b", x1: "a"})
    <x1:a, x2:b>
    """

    __slots__ = ("_items", "_map")

    def __init__(self, entries: Mapping[Variable, Value] | Iterable[tuple[Variable, Value]] = ()):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        m = dict(pairs)
        self._map = m
        self._items = tuple(sorted(m.items()))

    @property
    def domain(self) -> frozenset[Variable]:
        return frozenset(self._map)

    def items(self) -> tuple[tuple[Variable, Value], ...]:
        return self._items

    def __getitem__(self, x: Variable) -> Value:
        return self._map[x]

    def get(self, x: Variable, default=None):
        return self._map.get(x, default)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NamedTuple) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        return "<" + ", ".join(f"{k}:{v}" for k, v in self._items) + ">"


EMPTY_TUPLE = NamedTuple()


def restrict(t: NamedTuple, xs: Iterable[Variable]) -> NamedTuple:
    """The restriction ``t|_X``; ``X`` must be contained in the domain of ``t``."""
    xs = frozenset(xs)
    missing = xs - t.domain
    if missing:
        raise DomainError(f"cannot restrict {t!r}: {sorted(missing)} not in its domain")
    return NamedTuple((k, v) for k, v in t.items() if k in xs)


class Table:
    """A finite table over a base: the empty table, or a schema with >= 1 row.

    Rows are stored positionally against ``columns`` (sorted by variable id).
    The empty table has no columns and no rows; its schema is ALL_VARIABLES.
    Use :func:`make_table` or the module constants to construct tables.
    """

    __slots__ = ("columns", "rows", "rowset", "_hash")

    def __init__(self, columns: tuple[Variable, ...], rows: Iterable[tuple[Value, ...]]):
        rowset = frozenset(rows)
        rows = tuple(sorted(rowset))
        if not rows:
            columns = ()
        self.columns = columns
        self.rows = rows
        self.rowset = rowset
        self._hash = hash((columns, rows))

    @classmethod
    def from_positional(cls, columns: Iterable[Variable], rows: Iterable[tuple[Value, ...]]) -> Table:
        """Build from rows given in the order of ``columns`` (any column order)."""
        columns = tuple(columns)
        order = sorted(range(len(columns)), key=lambda i: columns[i])
        if len(set(columns)) != len(columns):
            raise ConstructionError(f"duplicate column in {columns}")
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != len(columns):
                raise ConstructionError(f"row {r} does not fit columns {columns}")
        return cls(tuple(columns[i] for i in order), (tuple(r[i] for i in order) for r in rows))

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @property
    def schema(self):
        if not self.rows:
            return ALL_VARIABLES
        return frozenset(self.columns)

    def index(self, x: Variable) -> int:
        return self.columns.index(x)

    def __iter__(self) -> Iterator[NamedTuple]:
        cols = self.columns
        for r in self.rows:
            yield NamedTuple(zip(cols, r))

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, t: object) -> bool:
        if not isinstance(t, NamedTuple) or self.is_empty or t.domain != self.schema:
            return False
        return tuple(t[c] for c in self.columns) in self.rowset

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Table):
            return NotImplemented
        return self._hash == other._hash and self.columns == other.columns and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_empty:
            return "EMPTY"
        head = ",".join(c.name for c in self.columns)
        body = " ".join("(" + ",".join(r) + ")" for r in self.rows)
        return f"[{head}]{{{body}}}"


EMPTY = Table((), ())
UNIT = Table((), [()])


def make_table(schema: Iterable[Variable], rows: Iterable[NamedTuple | Mapping[Variable, Value]]) -> Table:
    """Canonical table over ``schema``; no rows gives EMPTY whatever the schema."""
    cols = tuple(sorted(set(schema)))
    colset = frozenset(cols)
    out = []
    for row in rows:
        t = row if isinstance(row, NamedTuple) else NamedTuple(row)
        if t.domain != colset:
            raise ConstructionError(f"row {t!r} does not match schema {list(cols)}")
        out.append(tuple(t[c] for c in cols))
    return Table(cols, out)


def extends_member(t: NamedTuple, table: Table) -> bool:
    """Whether ``t`` extends some row of ``table`` (membership in the extension set)."""
    if table.is_empty:
        return False
    if not table.schema <= t.domain:
        return False
    return tuple(t[c] for c in table.columns) in table.rowset


@dataclass(frozen=True)
class Relation:
    arity: int
    tuples: frozenset[tuple[Value, ...]] = frozenset()


@dataclass(frozen=True)
class Structure:
    """A finite relational structure: a base and named relations over it."""

    base: Base
    relations: Mapping[str, Relation] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name, rel in self.relations.items():
            for tup in rel.tuples:
                if len(tup) != rel.arity:
                    raise ConstructionError(
                        f"relation {name}/{rel.arity}: tuple {tup} has length {len(tup)}"
                    )
                bad = [v for v in tup if v not in self.base]
                if bad:
                    raise ConstructionError(f"relation {name}: values {bad} not in base {self.base}")

    @classmethod
    def build(cls, base: Iterable[Value], **relations: Iterable[tuple[Value, ...]]) -> Structure:
        """Convenience constructor; arities are inferred from the first tuple.

        An empty relation needs an explicit :class:`Relation`.
        """
        rels = {}
        for name, tuples in relations.items():
            if isinstance(tuples, Relation):
                rels[name] = tuples
                continue
            tuples = frozenset(tuple(t) for t in tuples)
            if not tuples:
                raise ConstructionError(f"cannot infer arity of empty relation {name}")
            rels[name] = Relation(len(next(iter(tuples))), tuples)
        return cls(Base(tuple(base)), rels)
