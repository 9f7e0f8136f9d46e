"""Exceptions raised by the algebra library."""


class AlgebraError(ValueError):
    """Base class for every precondition failure in the library."""


class CapExceededError(AlgebraError):
    """A table or an identity check would exceed the configured desk-scale cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} needs {size} entries, above the cap of {cap}")


class ArityMismatchError(AlgebraError):
    """An argument tuple does not have the operation's arity."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} arguments, got {got}")


class ElementRangeError(AlgebraError):
    """An element index lies outside 0..order-1."""

    def __init__(self, index: int, order: int):
        self.index = index
        self.order = order
        super().__init__(f"element index {index} out of range for order {order}")


class UniverseMismatchError(AlgebraError):
    """Two operations that must share a carrier do not."""


class NotAssociativeError(AlgebraError):
    """An operation required to be associative is not."""


class NotNeutralError(AlgebraError):
    """An element required to be neutral is not."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not neutral")


class AlgFormatError(AlgebraError):
    """Malformed `.alg` text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class OracleTooLargeError(AlgebraError):
    """A brute-force oracle was asked for an order it cannot exhaust."""


class UndecidedError(AlgebraError):
    """A search timed out before it could certify an answer."""


class BitranslationError(AlgebraError):
    """A bitranslation violates one of the construction's laws."""

    def __init__(self, law: str, detail: str = ""):
        self.law = law
        super().__init__(f"bitranslation violates {law}" + (f": {detail}" if detail else ""))


class NotInvolutionError(AlgebraError):
    """The chosen element does not square to the neutral element."""


class EvenArityError(AlgebraError):
    """An odd arity is required."""

    def __init__(self, arity: int):
        self.arity = arity
        super().__init__(
            f"arity {arity} is even: adjoining a neutral element to an even-arity "
            "semigroup forces it to be reducible, so no IN-semigroup exists"
        )


class EnumerationCapError(AlgebraError):
    """An enumeration was asked for an order above its cap."""

    def __init__(self, what: str, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"{what} is capped at order {cap}, got {order}")


class RouteDisagreementError(AlgebraError):
    """Two independent computations of the same census disagree."""


class CatalogIOError(AlgebraError):
    """Reading or writing a catalog failed."""

    def __init__(self, path: object, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
