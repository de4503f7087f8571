"""Brute-force reference implementations used to check the real ones.

Everything here works on named tuples and enumerates ``G^X`` directly,
sharing no code with the positional implementations beyond the canonical
``make_table`` constructor.
"""

from __future__ import annotations

from itertools import product

from ctab.core import EMPTY, Base, NamedTuple, Table, make_table, restrict


def all_tuples(base: Base, xs) -> list[NamedTuple]:
    xs = sorted(xs)
    return [NamedTuple(zip(xs, vals)) for vals in product(base.elems, repeat=len(xs))]


def rows_of(t: Table) -> set[NamedTuple]:
    return set(t)


def join(t1: Table, t2: Table, base: Base) -> Table:
    """Every tuple over the union schema whose restrictions lie in both tables."""
    if t1.is_empty or t2.is_empty:
        return EMPTY
    s1, s2 = t1.schema, t2.schema
    r1, r2 = rows_of(t1), rows_of(t2)
    keep = [t for t in all_tuples(base, s1 | s2)
            if restrict(t, s1) in r1 and restrict(t, s2) in r2]
    return make_table(s1 | s2, keep)


def delete(x, t: Table) -> Table:
    if t.is_empty:
        return EMPTY
    s = t.schema - {x}
    return make_table(s, {restrict(r, s) for r in t})


def equality_table(base: Base, x, y) -> Table:
    return make_table({x, y}, [t for t in all_tuples(base, {x, y}) if t[x] == t[y]])


def compose_pointwise(t: Table, graph: dict) -> Table:
    """``{t ∘ λ}`` with λ given as a plain dict."""
    if t.is_empty:
        return EMPTY
    return make_table(graph, [NamedTuple({x: r[y] for x, y in graph.items()}) for r in t])


def leq(t1: Table, t2: Table) -> bool:
    """``t1 <= t2`` read off the rows: every row of t1 extends a row of t2."""
    if t1.is_empty:
        return True
    if t2.is_empty or not t2.schema <= t1.schema:
        return False
    r2 = rows_of(t2)
    return all(restrict(r, t2.schema) in r2 for r in t1)
