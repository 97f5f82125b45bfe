class MouldError(Exception):
    """Base class for library errors."""


class DivisionByZero(MouldError, ZeroDivisionError):
    pass


class PoleAtSubstitution(MouldError):
    pass


class SpecMismatch(MouldError):
    pass


class ConventionMismatch(MouldError):
    pass


class DepthExceeded(MouldError):
    pass


class VariableEscape(MouldError):
    pass


class NotInARI(MouldError):
    pass


class NotInGARI(MouldError):
    pass


class EmptyAbsorber(MouldError):
    pass


class ParseError(MouldError, ValueError):
    def __init__(self, message, source=None, line=None, column=None):
        self.source = source
        self.line = line
        self.column = column
        where = []
        if source:
            where.append(str(source))
        if line is not None:
            where.append("line %d" % line)
        if column is not None:
            where.append("col %d" % column)
        if where:
            message = "%s: %s" % (", ".join(where), message)
        super().__init__(message)
