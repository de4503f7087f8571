"""Exception hierarchy shared by the engine, the evaluator and the CLI."""


class CtabError(Exception):
    """Base class for all errors raised by ctab."""


class DomainError(CtabError):
    """A tuple was restricted to variables outside its domain."""


class ConstructionError(CtabError):
    """A table or structure was built from inconsistent parts."""


class SchemaError(CtabError):
    """An operation was applied to a table with an unsuitable schema."""


class BaseValueError(CtabError):
    """A value does not belong to the base of the algebra."""


class CompositionError(CtabError):
    """Two mappings cannot be composed because domain and codomain differ."""


class ParseError(CtabError):
    """Lexical or syntax error; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int | None = None, line: int | None = None):
        self.pos = pos
        self.line = line
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif pos is not None:
            where = f"at position {pos}: "
        super().__init__(where + message)


class EvaluationError(CtabError):
    """A formula could not be evaluated against a structure."""
