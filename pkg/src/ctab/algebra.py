"""Operations of the conjunctive table algebra over a finite base.

The base-independent operations (join, deletion, projection, the table
order, ...) are module-level functions. Operations that materialize tables
over the base, such as equality tables, live on :class:`TableAlgebra`,
which also re-exports the rest so that a whole model can be passed around
as one object.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Iterable

from ctab.core import (
    ALL_VARIABLES,
    EMPTY,
    UNIT,
    Base,
    Table,
    Value,
    Variable,
    fresh_variables,
)
from ctab.errors import BaseValueError, SchemaError


def join(t1: Table, t2: Table) -> Table:
    """Natural join, hash-partitioned on the shared columns."""
    if t1.is_empty or t2.is_empty:
        return EMPTY
    if t1 is t2 or t1 == t2:
        return t1
    cols2 = set(t2.columns)
    shared = [c for c in t1.columns if c in cols2]
    k1 = [t1.index(c) for c in shared]
    k2 = [t2.index(c) for c in shared]
    columns = tuple(sorted(set(t1.columns) | cols2))
    # for every output column: (0, i) reads t1 at i, (1, i) reads t2 at i
    source = [
        (0, t1.index(c)) if c in t1.columns else (1, t2.index(c))
        for c in columns
    ]

    buckets: dict[tuple, list[tuple]] = defaultdict(list)
    for r2 in t2.rows:
        buckets[tuple(r2[i] for i in k2)].append(r2)
    out = []
    for r1 in t1.rows:
        for r2 in buckets.get(tuple(r1[i] for i in k1), ()):
            pair = (r1, r2)
            out.append(tuple(pair[s][i] for s, i in source))
    return Table(columns, out)


def delete(x: Variable, table: Table) -> Table:
    """Delete the x-column if present; otherwise return the table unchanged."""
    if table.is_empty or x not in table.columns:
        return table
    i = table.index(x)
    columns = table.columns[:i] + table.columns[i + 1:]
    return Table(columns, (r[:i] + r[i + 1:] for r in table.rows))


def delete_all(xs: Iterable[Variable], table: Table) -> Table:
    """Generalized deletion of every variable in ``xs``."""
    xs = frozenset(xs)
    if table.is_empty or not xs & set(table.columns):
        return table
    keep = [i for i, c in enumerate(table.columns) if c not in xs]
    return Table(
        tuple(table.columns[i] for i in keep),
        (tuple(r[i] for i in keep) for r in table.rows),
    )


def project(ys: Iterable[Variable], table: Table) -> Table:
    ys = frozenset(ys)
    if table.is_empty:
        return EMPTY
    extra = ys - table.schema
    if extra:
        raise SchemaError(f"cannot project onto {sorted(extra)}: not in schema {list(table.columns)}")
    return delete_all(table.schema - ys, table)


def _require_columns(table: Table, present: Iterable[Variable] = (), absent: Iterable[Variable] = ()) -> None:
    missing = [x for x in present if x not in table.columns]
    if missing:
        raise SchemaError(f"columns {missing} not in schema {list(table.columns)}")
    clash = [y for y in absent if y in table.columns]
    if clash:
        raise SchemaError(f"columns {clash} already in schema {list(table.columns)}")


def duplicate(x: Variable, y: Variable, table: Table) -> Table:
    """Add a column ``y`` that copies column ``x``."""
    if x == y:
        raise SchemaError(f"duplicate needs two distinct variables, got {x} twice")
    if table.is_empty:
        return EMPTY
    _require_columns(table, present=[x], absent=[y])
    i = table.index(x)
    return Table.from_positional(table.columns + (y,), (r + (r[i],) for r in table.rows))


def rename(x: Variable, y: Variable, table: Table) -> Table:
    """Rename column ``x`` to ``y``."""
    if x == y:
        raise SchemaError(f"rename needs two distinct variables, got {x} twice")
    if table.is_empty:
        return EMPTY
    _require_columns(table, present=[x], absent=[y])
    columns = tuple(y if c == x else c for c in table.columns)
    return Table.from_positional(columns, table.rows)


def select_eq(x: Variable, y: Variable, table: Table) -> Table:
    """Rows whose x- and y-entries agree."""
    if table.is_empty:
        return EMPTY
    _require_columns(table, present=[x, y])
    i, j = table.index(x), table.index(y)
    return Table(table.columns, (r for r in table.rows if r[i] == r[j]))


def table_leq(t1: Table, t2: Table) -> bool:
    """The table order: ``t1 <= t2`` iff ``t1`` equals ``t1 ⋈ t2``."""
    return join(t1, t2) == t1


def table_leq_by_rows(t1: Table, t2: Table) -> bool:
    """Schema-containment characterization of the table order.

    Independent of :func:`table_leq`; the two are checked against each other.
    """
    if t1.is_empty:
        return True
    if t2.is_empty:
        return False
    if not t2.schema <= t1.schema:
        return False
    idx = [t1.index(c) for c in t2.columns]
    return all(tuple(r[i] for i in idx) in t2.rowset for r in t1.rows)


def dom(table: Table):
    """Schema as a set; ALL_VARIABLES for the empty table."""
    return table.schema


def default_probe(table: Table, extra: int = 2) -> frozenset[Variable]:
    cols = frozenset(table.columns)
    return cols | frozenset(fresh_variables(cols, extra))


def dim(table: Table, probe: Iterable[Variable] | None = None) -> frozenset[Variable]:
    """Dimension set ``{x | delete(x, T) != T}``, evaluated over a finite probe set."""
    probe = default_probe(table) if probe is None else frozenset(probe)
    return frozenset(x for x in probe if delete(x, table) != table)


class TableAlgebra:
    """The table algebra over a fixed finite base ``G``.

    Constants: ``zero`` is the empty table, ``one`` the table holding only
    the empty tuple.
    """

    zero = EMPTY
    one = UNIT

    def __init__(self, base: Base | Iterable[Value]):
        self.base = base if isinstance(base, Base) else Base(tuple(base))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.base!r})"

    join = staticmethod(join)
    delete = staticmethod(delete)
    delete_all = staticmethod(delete_all)
    project = staticmethod(project)
    duplicate = staticmethod(duplicate)
    rename = staticmethod(rename)
    select_eq = staticmethod(select_eq)
    leq = staticmethod(table_leq)
    dom = staticmethod(dom)
    dim = staticmethod(dim)

    def equality_table(self, x: Variable, y: Variable) -> Table:
        if x == y:
            return Table((x,), ((g,) for g in self.base))
        return Table.from_positional((x, y), ((g, g) for g in self.base))

    def equality_table_gen(self, pairs: Iterable[tuple[Variable, Variable]]) -> Table:
        """Join of the equality tables of all pairs; ``{⟨⟩}`` for no pairs."""
        result = UNIT
        for x, y in sorted(set(pairs)):
            result = join(result, self.equality_table(x, y))
        return result

    def select_const(self, x: Variable, g: Value, table: Table) -> Table:
        """Rows whose x-entry is ``g``.

        Conjunctive table algebras are not closed under this selection; it
        is provided for completeness of the SPJR comparison only.
        """
        if g not in self.base:
            raise BaseValueError(f"value {g!r} not in base {self.base!r}")
        if table.is_empty:
            return EMPTY
        _require_columns(table, present=[x])
        i = table.index(x)
        return Table(table.columns, (r for r in table.rows if r[i] == g))

    def full_slice(self, xs: Iterable[Variable]) -> Table:
        """``G^X`` as a table (EMPTY when the base is empty and X is not)."""
        cols = tuple(sorted(set(xs)))
        return Table(cols, product(self.base.elems, repeat=len(cols)))


__all__ = [
    "ALL_VARIABLES",
    "TableAlgebra",
    "delete",
    "delete_all",
    "dim",
    "dom",
    "duplicate",
    "join",
    "project",
    "rename",
    "select_eq",
    "table_leq",
    "table_leq_by_rows",
]
