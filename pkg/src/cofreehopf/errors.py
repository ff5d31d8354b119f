"""Exception types shared across the package."""


class StructuralError(Exception):
    """A precondition on shapes, alphabets or table domains was violated."""


class ConfigError(Exception):
    """A config document or expression failed to parse or validate.

    Carries an optional 1-based line number for diagnostics.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
