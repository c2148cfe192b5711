"""Exception hierarchy shared by every module."""


class DiffGSBError(Exception):
    """Base class for all library errors."""


class ZeroPolynomial(DiffGSBError, ValueError):
    """An operation needs a nonzero polynomial."""


class EmptyMonomial(DiffGSBError, ValueError):
    """An operation needs a monomial other than 1."""


class UnboundVariable(DiffGSBError, KeyError):
    """A substitution has no image for some variable."""


class OutOfBound(DiffGSBError, ValueError):
    """A polynomial leaves the bounded region an oracle was built for."""


class InvalidLie(DiffGSBError, ValueError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


class InputError(DiffGSBError, ValueError):
    """Malformed user input (polynomial text, config, rules file)."""


class ParseError(InputError):
    """Syntax error in polynomial text, with the offending offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownVariable(InputError):
    pass


class UnknownOperator(InputError):
    pass
