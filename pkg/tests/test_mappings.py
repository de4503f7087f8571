from __future__ import annotations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ctab.algebra import TableAlgebra, join, project
from ctab.core import EMPTY, Base, Table, variables
from ctab.errors import CompositionError, ConstructionError, SchemaError
from ctab.mappings import (
    GLOBAL_IDENTITY,
    FinPartialTransform,
    FreshScheme,
    Mapping,
    act,
    compose,
    decompose,
    fpt_compose,
    local_identity,
    outer_compose,
    restrict_to,
    table_compose,
)

import oracles
from strategies import BASES, POOL, bases, mappings, tables, transforms

x1, x2, x3, x4, x5 = POOL
y1, y2 = variables("y1 y2")
AB = TableAlgebra(Base(("a", "b")))


def tab(cols: str, *rows: str) -> Table:
    return Table.from_positional(variables(cols), [tuple(r) for r in rows])


@st.composite
def table_and_mapping(draw):
    """A base, a table ``u`` and a map ``λ`` into its schema."""
    base = draw(bases)
    u = draw(tables(base, max_cols=3))
    assume(not u.is_empty)
    lam = draw(mappings(cod=u.schema)) if u.schema else Mapping({}, ())
    return base, u, lam


class TestMapping:
    def test_must_be_total(self):
        with pytest.raises(ConstructionError):
            Mapping({x1: y1}, cod=[y1], dom=[x1, x2])

    def test_images_must_lie_in_codomain(self):
        with pytest.raises(ConstructionError):
            Mapping({x1: y2}, cod=[y1])

    def test_classifiers(self):
        fold = Mapping({x1: x1, x2: x1}, [x1])
        assert fold.is_folding() and not fold.is_bijection()
        bij = Mapping({x1: y1}, [y1])
        assert bij.is_bijection() and bij.is_domain_disjoint()
        assert Mapping.inclusion([x1], [x1, x2]).is_inclusion()
        with pytest.raises(ConstructionError):
            Mapping.inclusion([x1, x2], [x1])

    def test_inverse(self):
        bij = Mapping({x1: y1, x2: y2}, [y1, y2])
        assert compose(bij.inverse(), bij) == Mapping.identity([x1, x2])
        with pytest.raises(CompositionError):
            Mapping({x1: y1, x2: y1}, [y1]).inverse()


class TestCompose:
    def test_examples(self):
        mu = Mapping({x1: x3}, [x3])
        nu = Mapping({x3: y1}, [y1])
        assert compose(Mapping.identity([x3]), mu) == mu
        assert compose(nu, Mapping.identity([x3])) == nu
        assert compose(nu, mu) == Mapping({x1: y1}, [y1])

    def test_mismatch(self):
        with pytest.raises(CompositionError):
            compose(Mapping({x1: y1}, [y1]), Mapping({x2: x2}, [x2]))

    @given(st.data())
    def test_pointwise(self, data):
        mu = data.draw(mappings())
        nu = data.draw(mappings(dom=mu.cod))
        comp = compose(nu, mu)
        assert all(comp(x) == nu(mu(x)) for x in mu.dom)


class TestDecompose:
    def test_identity(self):
        ident = Mapping.identity([x1, x2])
        assert decompose(ident) == (ident, ident, ident)

    def test_constant_map(self):
        delta, xi, iota = decompose(Mapping({x1: y1, x2: y1}, [y1]))
        assert delta == Mapping({x1: x1, x2: x1}, [x1])
        assert xi == Mapping({x1: y1}, [y1])
        assert iota == Mapping.identity([y1])

    def test_disjoint_bijection(self):
        lam = Mapping({x1: y1, x2: y2}, [y1, y2])
        delta, xi, iota = decompose(lam)
        assert delta == Mapping.identity([x1, x2])
        assert xi == lam
        assert iota == Mapping.identity([y1, y2])

    @given(mappings())
    def test_recomposes(self, lam):
        delta, xi, iota = decompose(lam)
        assert delta.is_folding() and xi.is_bijection() and iota.is_inclusion()
        assert compose(iota, compose(xi, delta)) == lam
        # each fiber is folded onto its smallest member
        for x, z in delta.pairs:
            assert z == min(w for w in lam.dom if lam(w) == lam(x))


class TestTableCompose:
    def test_examples(self):
        t = tab("x1 x2", "ab", "bb")
        assert table_compose(t, Mapping.inclusion([x1], [x1, x2])) == project({x1}, t)
        const = Mapping({x2: x1, x3: x1}, [x1])
        assert table_compose(tab("x1", "a", "b"), const) == tab("x2 x3", "aa", "bb")
        assert table_compose(EMPTY, const) == EMPTY

    def test_schema_mismatch(self):
        with pytest.raises(SchemaError):
            table_compose(tab("x1", "a"), Mapping({x2: x3}, [x3]))

    @given(table_and_mapping(), st.data())
    def test_pointwise_and_sequential(self, tm, data):
        _, u, nu = tm
        assert table_compose(u, nu) == oracles.compose_pointwise(u, nu.graph)
        mu = data.draw(mappings(dom=None, cod=nu.dom)) if nu.dom else Mapping({}, ())
        assert table_compose(u, compose(nu, mu)) == table_compose(table_compose(u, nu), mu)


class TestOuterCompose:
    def test_fresh_scheme_avoids_both_sides(self):
        xi = FreshScheme()([x1, x2], [x2, x4])
        assert xi.cod == frozenset({x2, x4})
        assert xi.dom.isdisjoint({x1, x2, x4})
        assert xi.dom == frozenset({x3, x5})
        alt = FreshScheme(skip=3, reverse=True)([x1, x2], [x2, x4])
        assert alt != xi and alt.is_bijection()

    def test_bijection_round_trip(self):
        u = tab("x1 x2", "ab", "ba", "bb")
        sigma = Mapping({x3: x1, x4: x2}, [x1, x2])
        assert outer_compose(outer_compose(u, sigma, AB), sigma.inverse(), AB) == u

    def test_folding(self):
        u = tab("x1", "a", "b")
        delta = Mapping({x1: x1, x2: x1}, [x1])
        assert outer_compose(u, delta, AB) == join(u, AB.equality_table_gen(delta.pairs))
        assert outer_compose(u, delta, AB) == tab("x1 x2", "aa", "bb")

    def test_schema_mismatch(self):
        with pytest.raises(SchemaError):
            outer_compose(tab("x1", "a"), Mapping({x2: x3}, [x3]), AB)

    @given(table_and_mapping())
    def test_agrees_with_direct_composition(self, tm):
        base, u, lam = tm
        alg = TableAlgebra(base)
        expected = table_compose(u, lam)
        assert outer_compose(u, lam, alg) == expected
        assert outer_compose(u, lam, alg, FreshScheme(skip=2, reverse=True)) == expected


class TestTransforms:
    def test_not_functional(self):
        with pytest.raises(ConstructionError):
            FinPartialTransform([(x1, x2), (x1, x3)])

    def test_fpt_compose_examples(self):
        pi = local_identity
        assert fpt_compose(pi([x1, x2]), pi([x2, x3])) == pi([x2])
        lam = FinPartialTransform({x2: x1, x3: x5})
        assert fpt_compose(lam, pi(lam.domain)) == lam
        assert fpt_compose(FinPartialTransform({x2: x1}), FinPartialTransform({x3: x2})) == FinPartialTransform({x3: x1})
        assert fpt_compose(GLOBAL_IDENTITY, lam) == lam == fpt_compose(lam, GLOBAL_IDENTITY)

    def test_restrict_to_examples(self):
        # the identity on X ∩ Y, landing in Y
        assert restrict_to(local_identity([x1, x2]), [x2, x3]) == Mapping({x2: x2}, [x2, x3])
        assert restrict_to(FinPartialTransform({x2: x1, x3: x5}), [x1]) == Mapping({x2: x1}, [x1])
        assert restrict_to(FinPartialTransform(), [x1]) == Mapping({}, [x1])
        assert restrict_to(GLOBAL_IDENTITY, [x1]) == Mapping.identity([x1])

    def test_act_examples(self):
        u = tab("x1", "a")
        assert act(EMPTY, FinPartialTransform({x2: x1}), AB) == EMPTY
        assert act(u, local_identity(u.schema), AB) == u
        assert act(u, FinPartialTransform({x2: x1}), AB) == tab("x2", "a")
        assert act(u, GLOBAL_IDENTITY, AB) == u

    @given(st.sampled_from(BASES), st.data(), transforms(), transforms())
    def test_right_action(self, base, data, lam, mu):
        u = data.draw(tables(base))
        alg = TableAlgebra(base)
        assert act(act(u, lam, alg), mu, alg) == act(u, fpt_compose(lam, mu), alg)

    @given(transforms(), transforms(), transforms())
    def test_composition_is_associative(self, a, b, c):
        assert fpt_compose(fpt_compose(a, b), c) == fpt_compose(a, fpt_compose(b, c))
