"""Executable statements of the axioms and derived results.

Each law is a function of a :class:`Case`, which hands out random inputs
(recording them for the report) and returns whether the instance holds.
Conditional laws either build inputs that satisfy their hypothesis or call
``case.require``, which makes the runner draw a new instance.

Axioms keep their conventional labels (PS0-PS12, A1-A13, PSE1-PSE2); the
derived laws are named after what they state (``c.monotone``,
``odot.inclusion``, ...). ``uses`` lists what the law's proof relies on; a
model that violates an axiom may legitimately fail every law whose proof
depends on it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from ctab.algebra import table_leq_by_rows
from ctab.core import EMPTY, UNIT, NamedTuple, Table, Variable, extends_member, fresh_variables
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
    preimage,
    table_compose,
)
from ctab.axiomlab import generators as gen

PROJECTIONAL = "projectional semilattice"
ORBITAL = "orbital semilattice"
DERIVED = "derived"

ALTERNATE_SCHEME = FreshScheme(skip=3, reverse=True)


class Unmet(Exception):
    """The drawn instance does not satisfy the law's hypothesis."""


class Case:
    """Random inputs for one law instance, recorded under their names."""

    def __init__(self, rng: random.Random, model, vars: tuple[Variable, ...], max_rows: int = 6):
        self.rng = rng
        self.model = model
        self.alg = model.algebra()
        self.base = self.alg.base
        self.vars = vars
        # the pool plus two variables no generated table uses
        self.probe = tuple(sorted(set(vars) | set(fresh_variables(vars, 2))))
        self.max_rows = max_rows
        self.inputs: dict[str, object] = {}
        self.notes: dict[str, object] = {}

    def bind(self, name: str, value):
        self.inputs[name] = value
        return value

    def note(self, name: str, value):
        self.notes[name] = value
        return value

    def require(self, cond: bool) -> None:
        if not cond:
            raise Unmet

    def var(self, name: str, exclude=(), among=None) -> Variable:
        choices = [v for v in (among or self.vars) if v not in exclude]
        self.require(bool(choices))
        return self.bind(name, self.rng.choice(choices))

    def table(self, name: str, nonempty: bool = False) -> Table:
        return self.bind(name, gen.gen_table(self.rng, self.vars, self.base, self.max_rows, nonempty))

    def table_over(self, name: str, schema) -> Table:
        t = gen.gen_rows(self.rng, schema, self.base, self.max_rows)
        self.require(not t.is_empty)
        return self.bind(name, t)

    def subset(self, name: str, universe=None, lo: int = 0, hi: int | None = None) -> frozenset[Variable]:
        universe = self.vars if universe is None else universe
        return self.bind(name, gen.gen_subset(self.rng, universe, lo, hi))

    def mapping(self, name: str, dom, cod) -> Mapping:
        self.require(not dom or bool(cod))
        return self.bind(name, gen.gen_mapping(self.rng, dom, cod))

    def transform(self, name: str):
        return self.bind(name, gen.gen_transform(self.rng, self.probe, self.vars))

    def nonempty_over_subset(self, name: str):
        """A nonempty table ``u`` and its schema; only ``{⟨⟩}`` over the empty base."""
        schema = self.subset(name + ".schema", hi=gen.MAX_COLUMNS) if len(self.base) else frozenset()
        return self.table_over(name, schema), schema

    # short names for the operations in the axioms
    def meet(self, u: Table, v: Table) -> Table:
        return self.alg.join(u, v)

    def c(self, x: Variable, u: Table) -> Table:
        return self.alg.delete(x, u)

    def C(self, xs, u: Table) -> Table:
        return self.alg.delete_all(xs, u)

    def d(self, x: Variable, y: Variable) -> Table:
        return self.alg.equality_table(x, y)

    def e(self, pairs) -> Table:
        return self.alg.equality_table_gen(pairs)

    def leq(self, u: Table, v: Table) -> bool:
        return self.alg.leq(u, v)

    def dom(self, u: Table):
        return self.alg.dom(u)

    def odot(self, u: Table, lam: Mapping, scheme: FreshScheme | None = None) -> Table:
        if scheme is None:
            return outer_compose(u, lam, self.alg)
        return outer_compose(u, lam, self.alg, scheme)

    def act(self, u: Table, lam) -> Table:
        return act(u, lam, self.alg)


@dataclass(frozen=True)
class Law:
    id: str
    suite: str
    statement: str
    check: Callable[[Case], bool] = field(repr=False, compare=False)
    uses: tuple[str, ...] = ()


REGISTRY: dict[str, Law] = {}


def law(id: str, suite: str, statement: str, uses: tuple[str, ...] = ()):
    def register(fn: Callable[[Case], bool]) -> Callable[[Case], bool]:
        if id in REGISTRY:
            raise ValueError(f"law {id} registered twice")
        REGISTRY[id] = Law(id, suite, statement, fn, uses)
        return fn
    return register


def dependencies(law_id: str) -> frozenset[str]:
    """Every law and axiom the proof of ``law_id`` rests on, including itself."""
    seen: set[str] = set()
    todo = [law_id]
    while todo:
        cur = todo.pop()
        if cur in seen:
            continue
        seen.add(cur)
        if cur in REGISTRY:
            todo.extend(REGISTRY[cur].uses)
    return frozenset(seen)


# -- the projectional semilattice axioms -----------------------------------

@law("PS0", PROJECTIONAL, "(V, ∧, 0, 1) is a bounded semilattice")
def _ps0(c: Case) -> bool:
    u, v, w = c.table("u"), c.table("v"), c.table("w")
    m = c.meet
    return (
        m(m(u, v), w) == m(u, m(v, w))
        and m(u, v) == m(v, u)
        and m(u, u) == u
        and m(u, EMPTY) == EMPTY
        and m(u, UNIT) == u
    )


@law("PS1", PROJECTIONAL, "c_x(0) = 0")
def _ps1(c: Case) -> bool:
    x = c.var("x", among=c.probe)
    return c.c(x, EMPTY) == EMPTY


@law("PS2", PROJECTIONAL, "u ≤ c_x(u)")
def _ps2(c: Case) -> bool:
    u, x = c.table("u"), c.var("x", among=c.probe)
    return c.leq(u, c.c(x, u))


@law("PS3", PROJECTIONAL, "c_x(u ∧ c_x(v)) = c_x(u) ∧ c_x(v)")
def _ps3(c: Case) -> bool:
    u, v, x = c.table("u"), c.table("v"), c.var("x")
    return c.c(x, c.meet(u, c.c(x, v))) == c.meet(c.c(x, u), c.c(x, v))


@law("PS4", PROJECTIONAL, "c_x(c_y(u)) = c_y(c_x(u))")
def _ps4(c: Case) -> bool:
    u, x, y = c.table("u"), c.var("x"), c.var("y")
    return c.c(x, c.c(y, u)) == c.c(y, c.c(x, u))


@law("PS5", PROJECTIONAL, "u ≠ 0 ⇒ (u ≠ c_x(u) ⇔ u ≤ d_xx)")
def _ps5(c: Case) -> bool:
    u, x = c.table("u"), c.var("x", among=c.probe)
    c.require(u != EMPTY)
    return (u != c.c(x, u)) == c.leq(u, c.d(x, x))


@law("PS6", PROJECTIONAL, "x ≠ y,z ⇒ d_yz = c_x(d_yx ∧ d_xz)")
def _ps6(c: Case) -> bool:
    x = c.var("x")
    y, z = c.var("y", exclude=[x]), c.var("z", exclude=[x])
    return c.d(y, z) == c.c(x, c.meet(c.d(y, x), c.d(x, z)))


@law("PS7", PROJECTIONAL, "x ≠ y ⇒ d_xy ∧ c_x(d_xy ∧ u) ≤ u")
def _ps7(c: Case) -> bool:
    u, x = c.table("u"), c.var("x")
    y = c.var("y", exclude=[x])
    dxy = c.d(x, y)
    return c.leq(c.meet(dxy, c.c(x, c.meet(dxy, u))), u)


@law("PS8", PROJECTIONAL, "u ≠ 0 ⇒ dom(u) finite")
def _ps8(c: Case) -> bool:
    u = c.table("u")
    c.require(u != EMPTY)
    return isinstance(c.dom(u), frozenset)


@law("PS9", PROJECTIONAL, "dom(u) = {x ∈ var | u ≤ d_xx}")
def _ps9(c: Case) -> bool:
    u = c.table("u")
    d = c.dom(u)
    return all((x in d) == c.leq(u, c.d(x, x)) for x in c.probe)


@law("PS10", PROJECTIONAL, "dom(u) = ∅ ⇒ u = 1")
def _ps10(c: Case) -> bool:
    u = c.table("u")
    c.require(c.dom(u) == frozenset())
    return u == UNIT


@law("PS11", PROJECTIONAL, "d_xx ≠ 0")
def _ps11(c: Case) -> bool:
    x = c.var("x", among=c.probe)
    return c.note("d_xx", c.d(x, x)) != EMPTY


@law("PS12", PROJECTIONAL, "d_xy = d_yx")
def _ps12(c: Case) -> bool:
    x, y = c.var("x"), c.var("y")
    c.note("d_xy", c.d(x, y))
    c.note("d_yx", c.d(y, x))
    return c.d(x, y) == c.d(y, x)


# -- table order --------------------------------------------------------------

def _related_pair(c: Case) -> tuple[Table, Table]:
    t2 = c.table("T2")
    if c.rng.random() < 0.5:
        w = c.table("W")
        return c.bind("T1", c.meet(t2, w)), t2
    return c.table("T1"), t2


@law("order.rows", DERIVED, "T1 ≤ T2 ⇔ (X1 ⊇ X2 and {t|X2 | t ∈ T1} ⊆ T2)")
def _prop1(c: Case) -> bool:
    t1, t2 = _related_pair(c)
    by_join = t1 == c.meet(t1, t2)
    return by_join == c.leq(t1, t2) == table_leq_by_rows(t1, t2)


def _tuples_within(base, universe) -> list[NamedTuple]:
    """All named tuples whose domain is a subset of ``universe``."""
    universe = sorted(universe)
    out = []
    for k in range(len(universe) + 1):
        for dom in combinations(universe, k):
            for values in product(base.elems, repeat=k):
                out.append(NamedTuple(zip(dom, values)))
    return out


@law("order.extensions", DERIVED, "T1 ≤ T2 ⇔ ext(T1) ⊆ ext(T2), over tuples with domain ⊆ X1 ∪ X2")
def _prop2(c: Case) -> bool:
    t1, t2 = _related_pair(c)
    w = set(t1.columns) | set(t2.columns)
    included = all(
        extends_member(t, t2) for t in _tuples_within(c.base, w) if extends_member(t, t1)
    )
    return c.leq(t1, t2) == included


# -- deletion and diagonals ---------------------

@law("c.idempotent", DERIVED, "c_x(c_x(v)) = c_x(v)", uses=("PS2", "PS3"))
def _p3i(c: Case) -> bool:
    v, x = c.table("v"), c.var("x")
    return c.c(x, c.c(x, v)) == c.c(x, v)


@law("c.monotone", DERIVED, "u ≤ v ⇒ c_x(u) ≤ c_x(v)", uses=("PS2", "PS3"))
def _p3ii(c: Case) -> bool:
    v, w, x = c.table("v"), c.table("w"), c.var("x")
    u = c.bind("u", c.meet(v, w))
    c.require(c.leq(u, v))
    return c.leq(c.c(x, u), c.c(x, v))


@law("c.pull-out", DERIVED, "x ∉ dom(v) ⇒ c_x(u ∧ v) = c_x(u) ∧ v", uses=("PS9", "PS5", "PS3"))
def _p3iii(c: Case) -> bool:
    u, v = c.table("u"), c.table("v")
    x = c.var("x", exclude=v.columns, among=c.probe)
    c.require(x not in c.dom(v))
    return c.c(x, c.meet(u, v)) == c.meet(c.c(x, u), v)


@law("c.diagonal-absorb", DERIVED, "x ≠ y and u ≤ d_xy ⇒ d_xy ∧ c_x(u) = u", uses=("PS7", "PS2"))
def _p3iv(c: Case) -> bool:
    x = c.var("x")
    y = c.var("y", exclude=[x])
    u = c.bind("u", c.meet(c.table("w"), c.d(x, y)))
    return c.meet(c.d(x, y), c.c(x, u)) == u


@law("c.diagonal", DERIVED, "x ≠ y ⇒ c_x(d_xy) = d_yy", uses=("PS12", "PS6"))
def _p3v(c: Case) -> bool:
    x = c.var("x")
    y = c.var("y", exclude=[x])
    return c.note("c_x(d_xy)", c.c(x, c.d(x, y))) == c.note("d_yy", c.d(y, y))


@law("d.transitive", DERIVED, "d_xz ∧ d_zy ≤ d_xy", uses=("PS2", "PS6"))
def _p3vi(c: Case) -> bool:
    x, y, z = c.var("x"), c.var("y"), c.var("z")
    return c.leq(c.meet(c.d(x, z), c.d(z, y)), c.d(x, y))


# -- domains and slices ---------------------------------------------------------

@law("dim.diagonal", DERIVED, "d_xy ∈ V*[{x,y}]",
     uses=("PS9", "PS2", "c.diagonal", "PS12", "PS11", "PS1", "PS6", "c.idempotent"))
def _p4i(c: Case) -> bool:
    x, y = c.var("x"), c.var("y")
    dxy = c.note("d_xy", c.d(x, y))
    return dxy != EMPTY and c.dom(dxy) == {x, y}


@law("dim.meet", DERIVED, "u ∈ V[X], v ∈ V[Y] ⇒ u ∧ v ∈ V[X ∪ Y]",
     uses=("PS5", "PS2", "c.monotone", "PS9"))
def _p4ii(c: Case) -> bool:
    u, v = c.table("u"), c.table("v")
    w = c.meet(u, v)
    if w == EMPTY:
        return True
    return u != EMPTY and v != EMPTY and c.dom(w) == c.dom(u) | c.dom(v)


@law("dim.delete", DERIVED, "u ∈ V*[Y] ⇒ C_Z(u) ∈ V*[Y ∖ Z]",
     uses=("PS2", "PS9", "c.idempotent", "PS5", "c.monotone", "dim.diagonal"))
def _p4iii(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    zs = c.subset("Z", c.probe)
    r = c.C(zs, u)
    return r != EMPTY and c.dom(r) == ys - zs


@law("dim.equality", DERIVED, "ρ ⊆ X × Y ⇒ e_ρ ∈ V*[field(ρ)]",
     uses=("dim.diagonal", "dim.meet", "PS11", "PS1", "c.pull-out", "c.diagonal", "PS9", "PS12", "PS6"))
def _p4iv(c: Case) -> bool:
    n = c.rng.randint(0, 4)
    rho = c.bind("rho", frozenset((c.rng.choice(c.vars), c.rng.choice(c.vars)) for _ in range(n)))
    field_ = {v for pair in rho for v in pair}
    e = c.note("e_rho", c.e(rho))
    return e != EMPTY and c.dom(e) == field_


# -- generalized cylindrification and diagonals -------------------------------

@law("C.zero", DERIVED, "C_X(0) = 0", uses=("PS1",))
def _p5i(c: Case) -> bool:
    return c.C(c.subset("X", c.probe), EMPTY) == EMPTY


@law("C.commute", DERIVED, "C_X(C_Y(u)) = C_Y(C_X(u))", uses=("PS4",))
def _p5ii(c: Case) -> bool:
    u, xs, ys = c.table("u"), c.subset("X"), c.subset("Y")
    return c.C(xs, c.C(ys, u)) == c.C(ys, c.C(xs, u))


@law("C.pull-out", DERIVED, "Z ∩ dom(v) = ∅ ⇒ C_Z(u ∧ v) = C_Z(u) ∧ v", uses=("c.pull-out",))
def _p5iii(c: Case) -> bool:
    u, v = c.table("u"), c.table("v")
    outside = [x for x in c.probe if x not in c.dom(v)]
    zs = c.bind("Z", gen.gen_subset(c.rng, outside)) if outside else c.bind("Z", frozenset())
    c.require(not zs & set(v.columns) and (v != EMPTY or not zs))
    return c.C(zs, c.meet(u, v)) == c.meet(c.C(zs, u), v)


def _chain(c: Case, folding: bool = False) -> tuple[Mapping, Mapping]:
    """``mu: X -> Z`` and ``nu: Z -> Y`` over the pool."""
    xs = c.subset("X", hi=4)
    if folding:
        mu = c.bind("mu", gen.gen_folding(c.rng, xs))
        zs = mu.cod
    else:
        zs = c.subset("Z", lo=1 if xs else 0, hi=4)
        mu = c.mapping("mu", xs, zs)
    ys = c.subset("Y", lo=1 if zs else 0, hi=4)
    nu = c.mapping("nu", zs, ys)
    return mu, nu


@law("e.compose-leq", DERIVED, "e_μ ∧ e_ν ≤ e_{ν∘μ}", uses=("d.transitive",))
def _p6i(c: Case) -> bool:
    mu, nu = _chain(c)
    return c.leq(c.meet(c.e(mu.pairs), c.e(nu.pairs)), c.e(compose(nu, mu).pairs))


@law("e.compose", DERIVED, "e_μ ∧ e_ν = e_{ν∘μ} ∧ e_ν", uses=("PS12", "d.transitive", "e.compose-leq"))
def _p6ii(c: Case) -> bool:
    mu, nu = _chain(c)
    e_nu = c.e(nu.pairs)
    return c.meet(c.e(mu.pairs), e_nu) == c.meet(c.e(compose(nu, mu).pairs), e_nu)


@law("e.folding", DERIVED, "μ folding ⇒ e_μ ∧ e_ν = e_{ν∘μ}", uses=("PS12", "d.transitive", "e.compose-leq"))
def _p6iii(c: Case) -> bool:
    mu, nu = _chain(c, folding=True)
    return c.meet(c.e(mu.pairs), c.e(nu.pairs)) == c.e(compose(nu, mu).pairs)


def _disjoint_map(c: Case, ys, bijective: bool = False) -> Mapping:
    """A domain-disjoint ``λ: X -> Y``."""
    spare = [v for v in c.probe if v not in ys] + fresh_variables(set(c.probe) | set(ys), len(ys))
    if bijective:
        xs = frozenset(c.rng.sample(spare, len(ys)))
        return c.bind("sigma", gen.gen_bijection(c.rng, xs, ys))
    xs = c.subset("X", spare, hi=4) if ys else frozenset()
    return c.mapping("lambda", xs, ys)


@law("C.equality-cancel", DERIVED, "λ: X → Y domain-disjoint, u ∈ V*[Y] ⇒ C_X(u ∧ e_λ) = u",
     uses=("C.pull-out", "c.pull-out", "c.diagonal", "PS9"))
def _p7i(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    lam = _disjoint_map(c, ys)
    return c.C(lam.dom, c.meet(u, c.e(lam.pairs))) == u


@law("C.equality-restore", DERIVED, "λ: X → Y domain-disjoint, u ≤ e_λ ⇒ C_X(u) ∧ e_λ = u",
     uses=("C.pull-out", "c.diagonal-absorb"))
def _p7ii(c: Case) -> bool:
    ys = c.subset("Y", hi=4)
    lam = _disjoint_map(c, ys)
    e = c.e(lam.pairs)
    u = c.bind("u", c.meet(c.table("w"), e))
    return c.meet(c.C(lam.dom, u), e) == u


# -- outer composition -------------------------------------------------------

@law("PSE1", DERIVED, "u ⊙ λ = C_Y(u ∧ e_λ) if λ is domain-disjoint",
     uses=("C.equality-cancel", "C.zero", "dim.equality", "dim.meet", "dim.delete"))
def _pse1(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    lam = _disjoint_map(c, ys)
    return c.odot(u, lam) == c.C(ys, c.meet(u, c.e(lam.pairs)))


@law("PSE2", DERIVED, "u ⊙ (ν ∘ μ) = (u ⊙ ν) ⊙ μ",
     uses=("PSE1", "dim.equality", "C.pull-out", "C.equality-cancel", "e.compose", "C.commute"))
def _pse2(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    zs = c.subset("Z", c.probe, lo=1 if ys else 0, hi=4) if ys else frozenset()
    nu = c.mapping("nu", zs, ys)
    xs = c.subset("X", c.probe, hi=4) if zs else frozenset()
    mu = c.mapping("mu", xs, zs)
    return c.odot(u, compose(nu, mu)) == c.odot(c.odot(u, nu), mu)


@law("odot.scheme", DERIVED,
     "u ⊙ λ is independent of the choice of ξ_XY and equals {t ∘ λ | t ∈ u}",
     uses=("PSE1", "PSE2"))
def _prop8_scheme(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    xs = c.subset("X", c.probe, hi=4) if ys else frozenset()
    lam = c.mapping("lambda", xs, ys)
    first = c.note("default", c.odot(u, lam))
    second = c.note("alternate", c.odot(u, lam, ALTERNATE_SCHEME))
    return first == second == table_compose(u, lam)


@law("odot.bijection", DERIVED, "u ⊙ σ ⊙ σ⁻¹ = u for domain-disjoint bijections σ",
     uses=("PS12", "C.equality-restore", "C.equality-cancel", "PSE1"))
def _p9i(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    sigma = _disjoint_map(c, ys, bijective=True)
    return c.odot(c.odot(u, sigma), sigma.inverse()) == u


@law("odot.inclusion", DERIVED, "u ⊙ ι_X = C_{Y∖X}(u) for inclusions ι_X: X → Y",
     uses=("PSE2", "PSE1", "dim.equality", "C.pull-out", "dim.delete", "odot.bijection"))
def _p9ii(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    xs = c.subset("X", ys)
    return c.odot(u, Mapping.inclusion(xs, ys)) == c.C(ys - xs, u)


@law("odot.folding", DERIVED, "u ⊙ δ = u ∧ e_δ for foldings δ: X → Y",
     uses=("PSE2", "PSE1", "e.folding", "C.pull-out", "odot.bijection"))
def _p9iii(c: Case) -> bool:
    u, ys = c.nonempty_over_subset("u")
    extra = c.subset("X∖Y", [v for v in c.probe if v not in ys], hi=3) if ys else frozenset()
    xs = ys | extra
    ys_sorted = sorted(ys)
    delta = c.bind("delta", Mapping({x: x if x in ys else c.rng.choice(ys_sorted) for x in xs}, ys))
    return c.odot(u, delta) == c.meet(u, c.e(delta.pairs))


# -- SPJR / DPJR identities ------------------------------------------------------

def _table_with_column(c: Case, min_cols: int = 1) -> Table:
    t = c.table("T", nonempty=True)
    c.require(len(t.columns) >= min_cols)
    return t


@law("Interdef.select", DERIVED, "σ_{x=y}(T) = T ⋈ dup_xy(proj_{x}(T))")
def _interdef_select(c: Case) -> bool:
    t = _table_with_column(c, 2)
    x = c.var("x", among=t.columns)
    y = c.var("y", exclude=[x], among=t.columns)
    return c.alg.select_eq(x, y, t) == c.meet(t, c.alg.duplicate(x, y, c.alg.project({x}, t)))


@law("Interdef.dup", DERIVED, "dup_xy(T) = σ_{x=y}(T ⋈ rnm_xy(proj_{x}(T)))")
def _interdef_dup(c: Case) -> bool:
    t = _table_with_column(c)
    x = c.var("x", among=t.columns)
    y = c.var("y", exclude=t.columns, among=c.probe)
    a = c.alg
    return a.duplicate(x, y, t) == a.select_eq(x, y, c.meet(t, a.rename(x, y, a.project({x}, t))))


@law("Def.ops", DERIVED,
     "dup_xy(T) = T ⋈ E_xy, rnm_xy(T) = del_x(T ⋈ E_xy), σ_{x=y}(T) = T ⋈ E_xy",
     uses=("PS12",))
def _def_ops(c: Case) -> bool:
    t = _table_with_column(c)
    a = c.alg
    x = c.var("x", among=t.columns)
    y = c.var("y", exclude=t.columns, among=c.probe)
    ok = a.duplicate(x, y, t) == c.meet(t, c.d(x, y))
    ok = ok and a.rename(x, y, t) == c.c(x, c.meet(t, c.d(x, y)))
    z = c.var("z", among=t.columns)
    return ok and a.select_eq(x, z, t) == c.meet(t, c.d(x, z))


@law("DupDelete", DERIVED, "del_y(dup_xy(T)) = T")
def _dup_delete(c: Case) -> bool:
    t = _table_with_column(c)
    x = c.var("x", among=t.columns)
    y = c.var("y", exclude=t.columns, among=c.probe)
    return c.c(y, c.alg.duplicate(x, y, t)) == t


@law("Decomposition", DERIVED, "λ = ι ∘ ξ ∘ δ with δ folding, ξ bijection, ι inclusion")
def _decomposition(c: Case) -> bool:
    xs = c.subset("X", c.probe, hi=5)
    ys = c.subset("Y", c.probe, lo=1 if xs else 0, hi=5)
    lam = c.mapping("lambda", xs, ys)
    delta, xi, iota = decompose(lam)
    c.note("delta", delta)
    c.note("xi", xi)
    c.note("iota", iota)
    return (
        delta.is_folding()
        and xi.is_bijection()
        and iota.is_inclusion()
        and compose(iota, compose(xi, delta)) == lam
        and len(delta.cod) == len(lam.image())
    )


# -- the orbital semilattice axioms -----------------------------------------

_ORBITAL = ("odot.scheme", "PSE1", "PSE2", "odot.inclusion", "odot.folding")


@law("A1", ORBITAL, "u ≠ 0 ⇒ u · π_∅ = 1", uses=("A11", "PS10"))
def _a1(c: Case) -> bool:
    u = c.table("u")
    c.require(u != EMPTY)
    return c.act(u, local_identity(())) == UNIT


@law("A2", ORBITAL, "0 · λ = 0")
def _a2(c: Case) -> bool:
    return c.act(EMPTY, c.transform("lambda")) == EMPTY


@law("A3", ORBITAL, "dom(u) ⊆ Z ⇒ (u ∧ v) · π_Z = u ∧ (v · π_Z)",
     uses=("A2", "dim.meet", "odot.inclusion", "C.pull-out", "PS9"))
def _a3(c: Case) -> bool:
    u, v = c.table("u"), c.table("v")
    c.require(u != EMPTY)
    zs = c.bind("Z", c.dom(u) | gen.gen_subset(c.rng, c.probe, hi=3))
    pz = local_identity(zs)
    return c.act(c.meet(u, v), pz) == c.meet(u, c.act(v, pz))


@law("A4", ORBITAL, "u ≤ u · π_Z", uses=("c.monotone", "odot.inclusion"))
def _a4(c: Case) -> bool:
    u, zs = c.table("u"), c.subset("Z", c.probe)
    return c.leq(u, c.act(u, local_identity(zs)))


@law("A5", ORBITAL, "u ≤ v ⇒ u · λ ≤ v · λ",
     uses=("A2", "A4", "A7", "odot.inclusion", "c.monotone", "PS9", "dim.delete") + _ORBITAL)
def _a5(c: Case) -> bool:
    v = c.table("v")
    u = c.bind("u", c.meet(v, c.table("w")))
    lam = c.transform("lambda")
    return c.leq(c.act(u, lam), c.act(v, lam))


@law("A6", ORBITAL, "u ≤ d_xy, u ≠ 0, x ≠ y ⇒ u = (u · π_{dom(u)∖{y}}) ∧ d_xy",
     uses=("odot.inclusion", "c.diagonal-absorb", "PS12"))
def _a6(c: Case) -> bool:
    x = c.var("x")
    y = c.var("y", exclude=[x])
    u = c.bind("u", c.meet(c.table("w"), c.d(x, y)))
    c.require(u != EMPTY)
    return u == c.meet(c.act(u, local_identity(c.dom(u) - {y})), c.d(x, y))


@law("A7", ORBITAL, "u · λ · μ = u · (λ ∘ μ)", uses=("PSE2",) + _ORBITAL)
def _a7(c: Case) -> bool:
    u, lam, mu = c.table("u"), c.transform("lambda"), c.transform("mu")
    return c.act(c.act(u, lam), mu) == c.act(u, fpt_compose(lam, mu))


@law("A8", ORBITAL, "u · π_dom(u) = u", uses=("odot.inclusion",))
def _a8(c: Case) -> bool:
    u = c.table("u")
    pi = GLOBAL_IDENTITY if u == EMPTY else local_identity(c.dom(u))
    return c.act(u, pi) == u


@law("A9", ORBITAL, "d_xx ≠ 0", uses=("PS11",))
def _a9(c: Case) -> bool:
    x = c.var("x", among=c.probe)
    return c.d(x, x) != EMPTY


@law("A10", ORBITAL, "d_xy = d_xx · (xx/xy)", uses=("odot.folding", "dim.diagonal"))
def _a10(c: Case) -> bool:
    x, y = c.var("x"), c.var("y")
    fold = FinPartialTransform({x: x, y: x})
    return c.d(x, y) == c.note("d_xx·δ", c.act(c.d(x, x), fold))


@law("A11", ORBITAL, "u ≠ 0 ⇒ dom(u · λ) = λ⁻¹(dom(u))", uses=_ORBITAL)
def _a11(c: Case) -> bool:
    u = c.table("u")
    c.require(u != EMPTY)
    lam = c.transform("lambda")
    return c.dom(c.note("u·λ", c.act(u, lam))) == preimage(lam, c.dom(u))


@law("A12", ORBITAL, "u ≠ 0 ⇒ dom(u) finite", uses=("PS8",))
def _a12(c: Case) -> bool:
    u = c.table("u")
    c.require(u != EMPTY)
    return isinstance(c.dom(u), frozenset)


@law("A13", ORBITAL, "dom(u) = {x ∈ var | u ≤ d_xx}", uses=("PS9",))
def _a13(c: Case) -> bool:
    u = c.table("u")
    d = c.dom(u)
    return all((x in d) == c.leq(u, c.d(x, x)) for x in c.probe)
