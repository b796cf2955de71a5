"""Exception hierarchy.

Input problems derive from :class:`InputError` and preconditions from
:class:`PreconditionError`; the CLI maps these onto exit codes 1 and 2.
:class:`InternalFault` marks a broken internal cross-check (exit code 3).
"""


class IsoredError(Exception):
    pass


class InputError(IsoredError):
    pass


class PreconditionError(IsoredError):
    pass


class InternalFault(IsoredError):
    """Two independent computations that must agree did not."""


# ratfun


class ZeroDenominator(PreconditionError, ZeroDivisionError):
    pass


class DivisionByZeroFunction(PreconditionError, ZeroDivisionError):
    pass


class NotProper(PreconditionError):
    """Numerator degree exceeds denominator degree."""


class NonSplittingDenominator(PreconditionError):
    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"denominator has a factor with no rational roots: {factor}")


class ZeroPolynomial(PreconditionError):
    pass


# graphs


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class DuplicateEdge(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class DeletingAll(PreconditionError):
    pass


class NonConstantEntries(PreconditionError):
    pass


class EmptySet(PreconditionError):
    pass


# reduce


class ImproperSubset(PreconditionError):
    pass


class SingularComplement(PreconditionError):
    pass


class NotABaseSet(PreconditionError):
    pass


class NotNested(PreconditionError):
    pass


# cospec / latency / unpack


class SamePair(PreconditionError):
    pass


class DirectedInput(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class NotCospectral(PreconditionError):
    pass


class NoLatentAutomorphism(PreconditionError):
    """No reduction containing the pair exhibits a swap (directed inputs only)."""


class NotInW(PreconditionError):
    pass
