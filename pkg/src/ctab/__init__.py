"""Conjunctive table algebras over finite bases.

Tables with named columns, the operations that correspond to conjunctive
queries with equality (join, column deletion, equality tables), outer
composition along variable mappings, an evaluator for primitive positive
formulas, and a randomized checker for the algebra's axioms.
"""

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
)
from ctab.core import (
    ALL_VARIABLES,
    EMPTY,
    UNIT,
    Base,
    NamedTuple,
    Relation,
    Structure,
    Table,
    Variable,
    extends_member,
    make_table,
    restrict,
    var,
    variables,
)
from ctab.logic import evaluate, evaluate_oracle, format_formula, parse
from ctab.mappings import (
    GLOBAL_IDENTITY,
    FinPartialTransform,
    FreshScheme,
    Mapping,
    act,
    compose,
    decompose,
    fpt_compose,
    outer_compose,
    restrict_to,
    table_compose,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_VARIABLES",
    "EMPTY",
    "GLOBAL_IDENTITY",
    "UNIT",
    "act",
    "Base",
    "compose",
    "decompose",
    "delete",
    "delete_all",
    "dim",
    "dom",
    "duplicate",
    "evaluate",
    "evaluate_oracle",
    "extends_member",
    "FinPartialTransform",
    "format_formula",
    "fpt_compose",
    "FreshScheme",
    "join",
    "make_table",
    "Mapping",
    "NamedTuple",
    "outer_compose",
    "parse",
    "project",
    "Relation",
    "rename",
    "restrict",
    "restrict_to",
    "select_eq",
    "Structure",
    "Table",
    "table_compose",
    "table_leq",
    "TableAlgebra",
    "var",
    "Variable",
    "variables",
]
