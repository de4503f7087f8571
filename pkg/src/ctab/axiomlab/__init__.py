"""Randomized law checking for the table algebra and its counterexample models."""

from ctab.axiomlab.generators import gen_formula, gen_structure, gen_table
from ctab.axiomlab.laws import DERIVED, ORBITAL, PROJECTIONAL, REGISTRY, Law, dependencies
from ctab.axiomlab.models import BogusDiagonal, DegenerateEmptyBase, ModelUnderTest, Standard
from ctab.axiomlab.runner import (
    FAIL,
    PASS,
    UNMET,
    LawCase,
    Report,
    check_all,
    check_law,
    expected_to_fail,
    replay,
)

__all__ = [
    "DERIVED",
    "FAIL",
    "ORBITAL",
    "PASS",
    "PROJECTIONAL",
    "REGISTRY",
    "UNMET",
    "BogusDiagonal",
    "DegenerateEmptyBase",
    "Law",
    "LawCase",
    "ModelUnderTest",
    "Report",
    "Standard",
    "check_all",
    "check_law",
    "dependencies",
    "expected_to_fail",
    "gen_formula",
    "gen_structure",
    "gen_table",
    "replay",
]
