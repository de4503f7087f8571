from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ctab.algebra import (
    TableAlgebra,
    delete,
    delete_all,
    dim,
    dom,
    duplicate,
    join,
    project,
    rename,
    select_eq,
    table_leq,
    table_leq_by_rows,
)
from ctab.core import ALL_VARIABLES, EMPTY, UNIT, Base, Table, variables
from ctab.errors import BaseValueError, SchemaError

import oracles
from strategies import POOL, base_and_tables, bases

x1, x2, x3, x4, x5 = POOL
AB = TableAlgebra(Base(("a", "b")))


def tab(cols: str, *rows: str) -> Table:
    """``tab("x1 x2", "ab", "aa")`` with one character per cell."""
    return Table.from_positional(variables(cols), [tuple(r) for r in rows])


class TestJoin:
    def test_examples(self):
        t = tab("x1", "a")
        assert join(t, EMPTY) == EMPTY and join(EMPTY, t) == EMPTY
        assert join(t, t) == t
        assert join(tab("x1", "a"), tab("x2", "a", "b")) == tab("x1 x2", "aa", "ab")

    def test_unit_is_neutral(self):
        t = tab("x1 x2", "ab")
        assert join(t, UNIT) == t

    def test_disjoint_schemas_give_the_product(self):
        assert len(join(tab("x1", "a", "b"), tab("x2", "a", "b"))) == 4

    @given(base_and_tables(2))
    def test_matches_enumeration(self, bt):
        base, t1, t2 = bt
        assert join(t1, t2) == oracles.join(t1, t2, base)

    @given(base_and_tables(3))
    def test_semilattice(self, bt):
        _, u, v, w = bt
        assert join(join(u, v), w) == join(u, join(v, w))
        assert join(u, v) == join(v, u)


class TestDelete:
    def test_examples(self):
        assert delete(x1, EMPTY) == EMPTY
        t = tab("x1 x2", "aa", "ab")
        assert delete(x3, t) == t
        assert delete(x2, t) == tab("x1", "a")

    def test_delete_all_examples(self):
        t = tab("x1 x2", "aa", "ab")
        assert delete_all(set(), t) == t
        assert delete_all({x1, x2}, t) == delete(x2, delete(x1, t)) == delete(x1, delete(x2, t))
        assert delete_all(t.schema, t) == UNIT

    @given(base_and_tables(1), st.sampled_from(POOL))
    def test_matches_restriction(self, bt, x):
        _, t = bt
        assert delete(x, t) == oracles.delete(x, t)

    @given(base_and_tables(1), st.frozensets(st.sampled_from(POOL)))
    def test_delete_all_is_iterated_delete(self, bt, xs):
        _, t = bt
        expected = t
        for x in sorted(xs, reverse=True):
            expected = delete(x, expected)
        assert delete_all(xs, t) == expected


class TestEqualityTables:
    def test_examples(self):
        assert AB.equality_table(x1, x1) == tab("x1", "a", "b")
        assert AB.equality_table(x1, x2) == tab("x1 x2", "aa", "bb")
        assert TableAlgebra(Base(())).equality_table(x1, x2) == EMPTY

    def test_generalized(self):
        assert AB.equality_table_gen([]) == UNIT
        e = AB.equality_table_gen([(x1, x2), (x2, x3)])
        assert e == tab("x1 x2 x3", "aaa", "bbb")

    @given(bases, st.sampled_from(POOL), st.sampled_from(POOL))
    def test_matches_enumeration(self, base, x, y):
        assert TableAlgebra(base).equality_table(x, y) == oracles.equality_table(base, x, y)

    @given(bases, st.lists(st.tuples(st.sampled_from(POOL), st.sampled_from(POOL)), max_size=4))
    def test_generalized_is_never_empty(self, base, pairs):
        assert not TableAlgebra(base).equality_table_gen(pairs).is_empty


class TestProject:
    def test_examples(self):
        t = tab("x1 x2", "ab", "bb")
        assert project(t.schema, t) == t
        assert project(set(), t) == UNIT
        assert project({x1}, tab("x1 x2", "ab")) == tab("x1", "a")

    def test_projection_needs_existing_columns(self):
        with pytest.raises(SchemaError):
            project({x3}, tab("x1", "a"))

    def test_empty(self):
        assert project({x1}, EMPTY) == EMPTY


class TestDerivedOperations:
    def test_duplicate(self):
        assert duplicate(x1, x2, tab("x1", "a")) == tab("x1 x2", "aa")
        assert duplicate(x1, x2, EMPTY) == EMPTY
        with pytest.raises(SchemaError):
            duplicate(x1, x2, tab("x1 x2", "ab"))
        with pytest.raises(SchemaError):
            duplicate(x1, x1, tab("x1", "a"))

    def test_rename(self):
        assert rename(x1, x2, tab("x1", "a")) == tab("x2", "a")
        t = tab("x1 x3", "ab", "ba")
        assert rename(x2, x1, rename(x1, x2, t)) == t
        assert rename(x1, x2, EMPTY) == EMPTY

    def test_select_eq(self):
        t = tab("x1 x2", "ab", "aa")
        assert select_eq(x1, x1, t) == t
        assert select_eq(x1, x2, t) == tab("x1 x2", "aa")
        with pytest.raises(SchemaError):
            select_eq(x1, x3, t)

    def test_select_const(self):
        assert AB.select_const(x1, "a", tab("x1", "a", "b")) == tab("x1", "a")
        assert AB.select_const(x1, "a", EMPTY) == EMPTY
        assert AB.select_const(x1, "a", tab("x1", "b")) == EMPTY
        with pytest.raises(BaseValueError):
            AB.select_const(x1, "z", tab("x1", "a"))

    @given(base_and_tables(1), st.sampled_from(POOL), st.sampled_from(POOL))
    def test_agree_with_their_definitions(self, bt, x, y):
        base, t = bt
        alg = TableAlgebra(base)
        e = alg.equality_table(x, y)
        if t.is_empty or x == y or x not in t.columns:
            return
        if y not in t.columns:
            assert duplicate(x, y, t) == join(t, e)
            assert rename(x, y, t) == delete(x, join(t, e))
            assert delete(y, duplicate(x, y, t)) == t
        else:
            assert select_eq(x, y, t) == join(t, e)
            assert select_eq(x, y, t) == join(t, duplicate(x, y, project({x}, t)))


class TestOrder:
    def test_examples(self):
        t = tab("x1", "a")
        assert table_leq(EMPTY, t)
        assert table_leq(t, UNIT)
        assert table_leq(tab("x1 x2", "aa"), t)
        assert table_leq_by_rows(tab("x1 x2", "aa"), t)
        assert not table_leq(t, tab("x1 x2", "aa"))

    @given(base_and_tables(2))
    def test_characterizations_agree(self, bt):
        _, t1, t2 = bt
        assert table_leq(t1, t2) == table_leq_by_rows(t1, t2) == oracles.leq(t1, t2)


class TestDomDim:
    def test_empty(self):
        assert dom(EMPTY) is ALL_VARIABLES
        assert dim(EMPTY) == frozenset()
        assert dim(UNIT) == frozenset()

    @given(base_and_tables(1))
    def test_dim_is_schema_for_nonempty(self, bt):
        _, t = bt
        if not t.is_empty:
            assert dim(t) == t.schema == dom(t)


class TestFullSlice:
    def test_sizes(self):
        assert len(AB.full_slice([x1, x2])) == 4
        assert AB.full_slice([]) == UNIT
        assert TableAlgebra(Base(())).full_slice([x1]) == EMPTY
