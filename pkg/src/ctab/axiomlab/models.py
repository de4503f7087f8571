"""Models the law suite runs against.

``Standard`` is the genuine table algebra over a base. The other two are
the counterexamples separating the axioms: a singleton base whose diagonals
are replaced by ``d_xy := E_xx``, and the algebra over the empty base.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ctab.algebra import TableAlgebra
from ctab.core import Base, Table, Variable
from ctab.errors import ConstructionError


class BogusDiagonalAlgebra(TableAlgebra):
    """Table algebra whose diagonal ``d_xy`` is ``E_xx``; nothing else changes."""

    def equality_table(self, x: Variable, y: Variable) -> Table:
        return super().equality_table(x, x)


@dataclass(frozen=True)
class Standard:
    base: Base
    name: str = field(default="standard", init=False)
    # axioms the model is known not to satisfy
    violates: frozenset[str] = field(default=frozenset(), init=False)

    def algebra(self) -> TableAlgebra:
        return TableAlgebra(self.base)

    def __str__(self) -> str:
        return f"standard over {self.base!r}"


@dataclass(frozen=True)
class BogusDiagonal:
    base: Base = Base(("g",))
    name: str = field(default="bogus", init=False)
    violates: frozenset[str] = field(default=frozenset({"PS12"}), init=False)

    def __post_init__(self) -> None:
        if len(self.base) != 1:
            raise ConstructionError(f"the bogus-diagonal model needs a singleton base, got {self.base!r}")

    def algebra(self) -> TableAlgebra:
        return BogusDiagonalAlgebra(self.base)

    def __str__(self) -> str:
        return f"bogus diagonal over {self.base!r}"


@dataclass(frozen=True)
class DegenerateEmptyBase:
    base: Base = field(default=Base(()), init=False)
    name: str = field(default="empty-base", init=False)
    violates: frozenset[str] = field(default=frozenset({"PS11"}), init=False)

    def algebra(self) -> TableAlgebra:
        return TableAlgebra(self.base)

    def __str__(self) -> str:
        return "degenerate algebra over the empty base"


ModelUnderTest = Standard | BogusDiagonal | DegenerateEmptyBase
