"""Exception types shared across the package."""

from __future__ import annotations


class OrdlenError(Exception):
    """Base class for all library errors."""


class NotIrreflexive(OrdlenError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"relation contains a loop at element {element}")


class NotIntervalOrder(OrdlenError):
    """Raised when a relation contains a 2+2; carries a witness (a, b, c, d)
    with a < b, c < d, a not< d, c not< b."""

    def __init__(self, certificate: tuple[int, int, int, int]):
        self.certificate = certificate
        a, b, c, d = certificate
        super().__init__(f"not an interval order: 2+2 on ({a},{b},{c},{d})")


class MalformedInterval(OrdlenError):
    def __init__(self, index: int, interval: tuple[int, int]):
        self.index = index
        self.interval = interval
        super().__init__(f"malformed interval {interval} at element {index}")


class NotAscentSequence(OrdlenError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"not an ascent sequence: first violation at index {index}")


class SizeMismatch(OrdlenError):
    def __init__(self, n1: int, n2: int):
        self.sizes = (n1, n2)
        super().__init__(f"orders have different sizes {n1} and {n2}")


class NotAGap(OrdlenError):
    def __init__(self, i: int, j: int):
        self.gap = (i, j)
        super().__init__(f"[{i},{j}] is not a gap of the representation")


class SideConditionViolated(OrdlenError):
    def __init__(self, side: str, endpoint: int):
        self.side = side
        self.endpoint = endpoint
        super().__init__(f"collapse side={side} blocked at endpoint {endpoint}")


class UndefinedSlack(OrdlenError):
    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"slack({x},{y}) undefined: {y} precedes {x}")


class NotACycle(OrdlenError):
    pass


class CycleLimitExceeded(OrdlenError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"cycle count exceeds limit {limit}")


class ExtenderLimitExceeded(OrdlenError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"extender count exceeds limit {limit}")


class DimensionMismatch(OrdlenError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"vector has {got} coordinates, expected {expected}")


class SearchBoundExceeded(OrdlenError):
    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"search bound {bound} exceeded")


class BoundTooSmallWarning(UserWarning):
    """Endpoint bound below magnitude-1: the enumeration is empty."""
