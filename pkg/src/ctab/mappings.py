"""Mappings between finite variable sets and the outer composition of tables.

Conventions used throughout:

* ``Mapping`` is a total function ``dom -> cod``; ``compose(nu, mu)`` is
  ``nu ∘ mu`` (apply ``mu`` first).
* ``T ∘ λ`` re-indexes columns: for ``λ: X -> Y`` and ``T`` over ``Y`` the
  result is over ``X`` and row ``t`` becomes ``x ↦ t(λ(x))``.
* ``fpt_compose(lam, mu)`` is the relational product that corresponds to
  ``lam ∘ mu`` as functions, so that ``act`` is a right action::

      act(act(u, lam), mu) == act(u, fpt_compose(lam, mu))

  Worked example: lam = {x2 ↦ x1}, mu = {x3 ↦ x2}. Acting on a table over
  {x1} with lam moves column x1 to x2, then mu moves x2 to x3;
  fpt_compose(lam, mu) = {x3 ↦ x1} does it in one step.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping as MappingABC

from ctab.algebra import TableAlgebra
from ctab.core import EMPTY, Table, Variable, fresh_variables
from ctab.errors import CompositionError, ConstructionError, SchemaError


@dataclass(frozen=True)
class Mapping:
    """A total function between two finite sets of variables."""

    dom: frozenset[Variable]
    cod: frozenset[Variable]
    pairs: tuple[tuple[Variable, Variable], ...]

    def __init__(self, graph: MappingABC[Variable, Variable], cod: Iterable[Variable] | None = None,
                 dom: Iterable[Variable] | None = None):
        graph = dict(graph)
        d = frozenset(graph) if dom is None else frozenset(dom)
        c = frozenset(graph.values()) if cod is None else frozenset(cod)
        if set(graph) != d:
            raise ConstructionError(
                f"mapping is not total on {sorted(d)}: defined on {sorted(graph)}"
            )
        stray = {y for y in graph.values() if y not in c}
        if stray:
            raise ConstructionError(f"images {sorted(stray)} not in codomain {sorted(c)}")
        object.__setattr__(self, "dom", d)
        object.__setattr__(self, "cod", c)
        object.__setattr__(self, "pairs", tuple(sorted(graph.items())))

    @classmethod
    def identity(cls, xs: Iterable[Variable]) -> Mapping:
        xs = frozenset(xs)
        return cls({x: x for x in xs}, xs)

    @classmethod
    def inclusion(cls, xs: Iterable[Variable], ys: Iterable[Variable]) -> Mapping:
        xs, ys = frozenset(xs), frozenset(ys)
        if not xs <= ys:
            raise ConstructionError(f"inclusion needs {sorted(xs)} ⊆ {sorted(ys)}")
        return cls({x: x for x in xs}, ys)

    @property
    def graph(self) -> dict[Variable, Variable]:
        return dict(self.pairs)

    def __call__(self, x: Variable) -> Variable:
        return self.graph[x]

    def image(self) -> frozenset[Variable]:
        return frozenset(y for _, y in self.pairs)

    def is_inclusion(self) -> bool:
        return self.dom <= self.cod and all(x == y for x, y in self.pairs)

    def is_bijection(self) -> bool:
        return self.image() == self.cod and len(self.image()) == len(self.dom)

    def is_folding(self) -> bool:
        g = self.graph
        return self.cod <= self.dom and all(g[y] == y for y in self.cod)

    def is_domain_disjoint(self) -> bool:
        return not self.dom & self.cod

    def inverse(self) -> Mapping:
        if not self.is_bijection():
            raise CompositionError(f"{self} is not a bijection")
        return Mapping({y: x for x, y in self.pairs}, self.dom)

    def __repr__(self) -> str:
        body = ", ".join(f"{x}->{y}" for x, y in self.pairs)
        return f"Mapping({{{body}}}: {sorted(self.dom)} -> {sorted(self.cod)})"


def compose(nu: Mapping, mu: Mapping) -> Mapping:
    """Function composition ``nu ∘ mu``."""
    if mu.cod != nu.dom:
        raise CompositionError(
            f"cannot compose: codomain {sorted(mu.cod)} of the inner map "
            f"differs from domain {sorted(nu.dom)} of the outer map"
        )
    g = nu.graph
    return Mapping({x: g[y] for x, y in mu.pairs}, nu.cod)


def decompose(lam: Mapping) -> tuple[Mapping, Mapping, Mapping]:
    """Factor ``lam = iota ∘ xi ∘ delta`` (folding, bijection, inclusion).

    Each fiber of ``lam`` is folded onto its smallest variable.
    """
    fibers: dict[Variable, list[Variable]] = defaultdict(list)
    for x, y in lam.pairs:
        fibers[y].append(x)
    rep = {y: min(xs) for y, xs in fibers.items()}
    z1 = frozenset(rep.values())
    z2 = frozenset(fibers)
    delta = Mapping({x: rep[y] for x, y in lam.pairs}, z1)
    xi = Mapping({z: lam(z) for z in z1}, z2)
    iota = Mapping.inclusion(z2, lam.cod)
    return delta, xi, iota


def table_compose(table: Table, lam: Mapping) -> Table:
    """Direct outer composition ``T ∘ λ = {t ∘ λ | t ∈ T}``."""
    if table.is_empty:
        return EMPTY
    if table.schema != lam.cod:
        raise SchemaError(
            f"codomain {sorted(lam.cod)} does not match schema {list(table.columns)}"
        )
    cols = tuple(sorted(lam.dom))
    src = [table.index(lam(x)) for x in cols]
    return Table(cols, (tuple(r[i] for i in src) for r in table.rows))


@dataclass(frozen=True)
class FreshScheme:
    """Deterministic choice of ``ξ_XY: Z_XY -> Y`` with ``Z_XY`` disjoint from X ∪ Y.

    The default takes the ``|Y|`` smallest unused variables and pairs them
    with ``Y`` in enumeration order. ``skip`` and ``reverse`` give alternate
    schemes for checking that results do not depend on the choice.
    """

    skip: int = 0
    reverse: bool = False

    def __call__(self, xs: Iterable[Variable], ys: Iterable[Variable]) -> Mapping:
        xs, ys = frozenset(xs), frozenset(ys)
        zs = fresh_variables(xs | ys, len(ys), self.skip)
        targets = sorted(ys, reverse=self.reverse)
        return Mapping(dict(zip(zs, targets)), ys)


DEFAULT_SCHEME = FreshScheme()


def outer_compose(u: Table, lam: Mapping, alg: TableAlgebra,
                  scheme: FreshScheme = DEFAULT_SCHEME) -> Table:
    """Outer composition built only from the algebra's join, deletion and diagonals.

    Domain-disjoint maps use ``C_Y(u ∧ e_λ)``; any other map is routed
    through the bijection chosen by ``scheme``. Agrees with
    :func:`table_compose` on every genuine table algebra.
    """
    if u.is_empty:
        return EMPTY
    if u.schema != lam.cod:
        raise SchemaError(
            f"codomain {sorted(lam.cod)} does not match schema {list(u.columns)}"
        )
    if lam.is_domain_disjoint():
        return alg.delete_all(lam.cod, alg.join(u, alg.equality_table_gen(lam.pairs)))
    xi = scheme(lam.dom, lam.cod)
    stage = outer_compose(u, xi, alg, scheme)
    return outer_compose(stage, compose(xi.inverse(), lam), alg, scheme)


class _GlobalIdentity:
    """The identity on all variables, adjoined to make the transformations a monoid."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "π_var"

    def __reduce__(self):
        return (_GlobalIdentity, ())


GLOBAL_IDENTITY = _GlobalIdentity()


@dataclass(frozen=True)
class FinPartialTransform:
    """A finite functional relation on variables."""

    pairs: tuple[tuple[Variable, Variable], ...]

    def __init__(self, pairs: Iterable[tuple[Variable, Variable]] | MappingABC[Variable, Variable] = ()):
        if isinstance(pairs, MappingABC):
            pairs = pairs.items()
        pairs = sorted(set(pairs))
        seen: dict[Variable, Variable] = {}
        for x, y in pairs:
            if x in seen and seen[x] != y:
                raise ConstructionError(f"not functional: {x} maps to {seen[x]} and {y}")
            seen[x] = y
        object.__setattr__(self, "pairs", tuple(pairs))

    @classmethod
    def local_identity(cls, xs: Iterable[Variable]) -> FinPartialTransform:
        return cls((x, x) for x in xs)

    @property
    def graph(self) -> dict[Variable, Variable]:
        return dict(self.pairs)

    @property
    def domain(self) -> frozenset[Variable]:
        return frozenset(x for x, _ in self.pairs)

    def __call__(self, x: Variable) -> Variable:
        return self.graph[x]

    def preimage(self, ys: Iterable[Variable]) -> frozenset[Variable]:
        ys = frozenset(ys)
        return frozenset(x for x, y in self.pairs if y in ys)

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{x}->{y}" for x, y in self.pairs) + "}"


Transform = "FinPartialTransform | _GlobalIdentity"


def local_identity(xs: Iterable[Variable]) -> FinPartialTransform:
    return FinPartialTransform.local_identity(xs)


def fpt_compose(lam, mu):
    """``lam ∘ mu``: the pairs ``(x, z)`` with ``(x, y) ∈ mu`` and ``(y, z) ∈ lam``."""
    if lam is GLOBAL_IDENTITY:
        return mu
    if mu is GLOBAL_IDENTITY:
        return lam
    g = lam.graph
    return FinPartialTransform((x, g[y]) for x, y in mu.pairs if y in g)


def preimage(lam, ys: Iterable[Variable]) -> frozenset[Variable]:
    if lam is GLOBAL_IDENTITY:
        return frozenset(ys)
    return lam.preimage(ys)


def restrict_to(lam, ys: Iterable[Variable]) -> Mapping:
    """``λ‖^Y``: the function ``λ⁻¹(Y) -> Y`` given by ``λ``."""
    ys = frozenset(ys)
    if lam is GLOBAL_IDENTITY:
        return Mapping.identity(ys)
    return Mapping({x: y for x, y in lam.pairs if y in ys}, ys)


def act(u: Table, lam, alg: TableAlgebra, scheme: FreshScheme = DEFAULT_SCHEME) -> Table:
    """The monoid action ``u · λ``; the empty table is fixed."""
    if u.is_empty:
        return EMPTY
    return outer_compose(u, restrict_to(lam, u.columns), alg, scheme)


__all__ = [
    "DEFAULT_SCHEME",
    "GLOBAL_IDENTITY",
    "FinPartialTransform",
    "FreshScheme",
    "Mapping",
    "act",
    "compose",
    "decompose",
    "fpt_compose",
    "local_identity",
    "outer_compose",
    "preimage",
    "restrict_to",
    "table_compose",
]
