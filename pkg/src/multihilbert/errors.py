"""Exception hierarchy shared by the library and the CLI."""


class MultiHilbertError(ValueError):
    pass


class PointSetError(MultiHilbertError):
    """Malformed or invalid point-set input."""


class PointSyntaxError(PointSetError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ArityError(PointSyntaxError):
    """A point has the wrong number of factors or coordinates."""


class ZeroFactor(PointSyntaxError):
    """A factor vector is identically zero."""


class DuplicatePoint(PointSyntaxError):
    pass


class EmptySet(PointSetError):
    pass


class NotAProduct(MultiHilbertError):
    """Fiber operations need at least two factors."""


class NotSingleFactor(MultiHilbertError):
    pass


class WrongAmbient(MultiHilbertError):
    """Operation is only defined on P^1 x P^1."""


class PartitionError(MultiHilbertError):
    pass


class ZeroMargin(PartitionError):
    """A (0,1)-matrix has an all-zero row or column."""


class Infeasible(PartitionError):
    """No (0,1)-matrix has the requested margins."""


class SumMismatch(PartitionError):
    pass
