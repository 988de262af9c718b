"""Exception types shared across the package."""


class BjopError(Exception):
    """Base class for all errors raised by bjop."""


class DimensionMismatch(BjopError, ValueError):
    """Operands live on phase spaces of different dimension."""


class IndexOutOfRange(BjopError, IndexError):
    pass


class GridMismatch(BjopError, ValueError):
    """Grid functions sampled on different grids were combined."""


class NonFiniteInput(BjopError, ValueError):
    pass


class CommensurabilityError(BjopError, ValueError):
    """A phase point does not sit on the grid's alias-free lattice."""


class ParseError(BjopError, ValueError):
    """Syntax error in a symbol expression.

    The ``offset`` attribute is the byte offset into the source string.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
