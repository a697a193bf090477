"""Exception hierarchy shared by every module of the package."""


class SubspaceCodesError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(SubspaceCodesError, ValueError):
    pass


# finite fields
class NotPrime(SubspaceCodesError, ValueError):
    pass


class DegreeZero(SubspaceCodesError, ValueError):
    pass


class FieldTooLarge(SubspaceCodesError, ValueError):
    pass


class FieldMismatch(SubspaceCodesError, TypeError):
    pass


class DivisionByZero(SubspaceCodesError, ZeroDivisionError):
    pass


# subspaces
class RaggedMatrix(SubspaceCodesError, ValueError):
    pass


class AmbientMismatch(SubspaceCodesError, ValueError):
    pass


class WrongHyperplaneDimension(SubspaceCodesError, ValueError):
    pass


class EnumerationTooLarge(SubspaceCodesError):
    """Raised instead of silently sampling when an exhaustive pass is too big."""

    def __init__(self, count, limit):
        super().__init__(f"enumeration of {count} objects exceeds limit {limit}")
        self.count = count
        self.limit = limit


class EmptyCode(SubspaceCodesError, ValueError):
    pass


class EmptyOrSingleton(SubspaceCodesError, ValueError):
    pass


# constants
class PrecisionUnsupported(SubspaceCodesError, ValueError):
    pass


# linear programming
class Infeasible(SubspaceCodesError):
    pass


class Unbounded(SubspaceCodesError):
    pass


class NodeBudgetExceeded(SubspaceCodesError):
    """Branch-and-bound ran out of nodes; carries the best information found."""

    def __init__(self, best_bound, incumbent=None, witness=None, nodes=0):
        super().__init__(
            f"node budget exhausted after {nodes} nodes "
            f"(bound {best_bound}, incumbent {incumbent})"
        )
        self.best_bound = best_bound
        self.incumbent = incumbent
        self.witness = witness
        self.nodes = nodes


class CodeFormatError(SubspaceCodesError, ValueError):
    pass
