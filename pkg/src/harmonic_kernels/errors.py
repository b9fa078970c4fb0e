"""Exception hierarchy for the engine."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class SystemMismatchError(EngineError):
    """Two polynomials over different variable systems were combined."""


class UnknownSymbolError(EngineError):
    """A symbol or group name was not found in the variable system."""


class ParseError(EngineError):
    """Polynomial text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class KindMismatchError(EngineError):
    """An operator variant was applied to a group of the wrong kind/shape."""


class HomogeneityError(EngineError):
    """An operation required (bi)homogeneous input and did not get it."""


class InvalidParamsError(EngineError):
    """Kernel/special-function parameters outside their admissible range."""


class ZeroDimensionalError(EngineError):
    """A random element of a zero-dimensional space was requested."""


class CapExceeded(EngineError):
    """A configured resource cap would be exceeded; carries the cap name."""

    def __init__(self, cap: str, detail: str = ""):
        super().__init__(f"cap exceeded: {cap}" + (f" ({detail})" if detail else ""))
        self.cap = cap
        self.detail = detail
