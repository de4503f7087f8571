"""Random generation of tables, mappings, transformations, formulas and structures.

All generators take an explicit ``random.Random`` so that every case can be
replayed from its seed.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Sequence

from ctab.core import EMPTY, UNIT, Base, Relation, Structure, Table, Variable
from ctab.logic import FALSE, TRUE, And, Eq, Exists, Formula, RelAtom, free_vars
from ctab.mappings import GLOBAL_IDENTITY, FinPartialTransform, Mapping

MAX_COLUMNS = 4


def pool(n: int = 5) -> tuple[Variable, ...]:
    return tuple(Variable(i) for i in range(1, n + 1))


def gen_subset(rng: random.Random, universe: Sequence[Variable], lo: int = 0,
               hi: int | None = None) -> frozenset[Variable]:
    universe = sorted(universe)
    hi = len(universe) if hi is None else min(hi, len(universe))
    lo = min(lo, hi)
    return frozenset(rng.sample(universe, rng.randint(lo, hi)))


def gen_rows(rng: random.Random, schema, base: Base, max_rows: int = 6) -> Table:
    """A nonempty table over exactly ``schema`` (EMPTY if ``G^schema`` is empty)."""
    cols = tuple(sorted(schema))
    full = list(product(base.elems, repeat=len(cols)))
    if not full:
        return EMPTY
    if rng.random() < 0.15:
        return Table(cols, full)
    n = rng.randint(1, min(max_rows, len(full)))
    return Table(cols, rng.sample(full, n))


def gen_table(rng: random.Random, vars: Sequence[Variable], base: Base, max_rows: int = 6,
              nonempty: bool = False) -> Table:
    """Mix of EMPTY, ``{⟨⟩}`` and nonempty tables over random sub-schemas of ``vars``."""
    r = rng.random()
    if not nonempty and r < 0.1:
        return EMPTY
    if r < 0.2:
        return UNIT
    if not len(base):
        return UNIT if nonempty else rng.choice([EMPTY, UNIT])
    schema = gen_subset(rng, vars, 0, MAX_COLUMNS)
    return gen_rows(rng, schema, base, max_rows)


def gen_mapping(rng: random.Random, dom, cod) -> Mapping:
    dom, cod = sorted(dom), sorted(cod)
    if dom and not cod:
        raise ValueError("no function from a nonempty set to the empty set")
    return Mapping({x: rng.choice(cod) for x in dom}, cod, dom)


def gen_folding(rng: random.Random, dom) -> Mapping:
    """A folding ``dom -> Z`` with ``Z ⊆ dom``, identity on ``Z``."""
    dom = sorted(dom)
    z = gen_subset(rng, dom, 1 if dom else 0)
    zs = sorted(z)
    return Mapping({x: (x if x in z else rng.choice(zs)) for x in dom}, z, dom)


def gen_bijection(rng: random.Random, dom, cod) -> Mapping:
    dom, cod = sorted(dom), list(cod)
    if len(dom) != len(cod):
        raise ValueError("bijection needs sets of equal size")
    rng.shuffle(cod)
    return Mapping(dict(zip(dom, cod)), cod, dom)


def gen_transform(rng: random.Random, domain_vars: Sequence[Variable],
                  image_vars: Sequence[Variable], identity_rate: float = 0.1):
    """A finite partial transformation, occasionally the global identity."""
    if rng.random() < identity_rate:
        return GLOBAL_IDENTITY
    dom = gen_subset(rng, domain_vars)
    images = sorted(image_vars)
    return FinPartialTransform({x: rng.choice(images) for x in sorted(dom)})


# -- formulas and structures ------------------------------------------------

def gen_structure(rng: random.Random, max_base: int = 3, max_relations: int = 2,
                  max_arity: int = 3) -> Structure:
    base = Base(tuple("abc"[: rng.randint(1, max_base)]))
    rels = {}
    for k in range(rng.randint(1, max_relations)):
        arity = rng.randint(1, max_arity)
        density = rng.choice([0.2, 0.4, 0.7])
        tuples = frozenset(t for t in product(base.elems, repeat=arity) if rng.random() < density)
        rels["RS"[k]] = Relation(arity, tuples)
    return Structure(base, rels)


def gen_formula(rng: random.Random, structure: Structure, vars: Sequence[Variable],
                depth: int = 4) -> Formula:
    """Random formula of nesting depth at most ``depth``.

    Variables come from a small pool so conjuncts tend to share columns, and
    quantifiers prefer variables that occur free in their body.
    """
    if depth == 0 or rng.random() < 0.25:
        return _gen_leaf(rng, structure, vars)
    if rng.random() < 0.6:
        return And(gen_formula(rng, structure, vars, depth - 1),
                   gen_formula(rng, structure, vars, depth - 1))
    body = gen_formula(rng, structure, vars, depth - 1)
    fv = sorted(free_vars(body))
    x = rng.choice(fv) if fv and rng.random() < 0.85 else rng.choice(list(vars))
    return Exists(x, body)


def _gen_leaf(rng: random.Random, structure: Structure, vars: Sequence[Variable]) -> Formula:
    r = rng.random()
    if r < 0.04:
        return TRUE
    if r < 0.08:
        return FALSE
    if r < 0.35 or not structure.relations:
        return Eq(rng.choice(vars), rng.choice(vars))
    name = rng.choice(sorted(structure.relations))
    arity = structure.relations[name].arity
    return RelAtom(name, tuple(rng.choice(vars) for _ in range(arity)))


def formula_depth(phi: Formula) -> int:
    if isinstance(phi, And):
        return 1 + max(formula_depth(phi.left), formula_depth(phi.right))
    if isinstance(phi, Exists):
        return 1 + formula_depth(phi.body)
    return 0
