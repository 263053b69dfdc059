"""Exceptions shared across the package."""


class WidthError(ValueError):
    """A monomial uses a column beyond the declared ring width."""


class RowError(ValueError):
    """A row index lies outside 1..rows, or two ideals disagree on rows."""


class UndefinedInvariantError(ValueError):
    """The requested invariant is not defined for this ideal."""


class CapacityError(RuntimeError):
    """A size guard was exceeded; the exact computation was refused."""


class ChainHypothesisError(ValueError):
    """An operation's hypothesis on the chain data is violated."""


class ParseError(ValueError):
    """Chain-description text failed to parse."""

    def __init__(self, line, column, message):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, col {column}: {message}")
