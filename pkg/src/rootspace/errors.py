"""Typed errors shared across the package."""


class RootspaceError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfOrder(RootspaceError):
    """A factor index exceeds the order of some tensor monomial."""


class OrderMismatch(RootspaceError):
    """Operands have incompatible tensor orders for the requested operation."""


class UnsupportedMapping(RootspaceError):
    """The family does not provide the requested mapping slot."""


class NotApplicable(RootspaceError):
    """The identity is not defined for this family or mode."""


class NegativePowerGroup(RootspaceError):
    """Product-rule expansion hit a grouped factor with negative derivative power.

    Antiderivative wrappers cannot be distributed over a product, so
    Leibniz mode refuses them instead of guessing.
    """


class UnsupportedFamily(RootspaceError):
    """The operation is not defined for this family."""


class ParseError(RootspaceError):
    """Input text does not conform to the expression grammar.

    offset is the character position of the failure; expected is the
    set of token descriptions that would have been accepted there.
    """

    def __init__(self, offset: int, expected, found: str = ""):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        what = found if found else "end of input"
        super().__init__(
            "at offset %d: expected %s, found %s"
            % (offset, " or ".join(self.expected), what)
        )
