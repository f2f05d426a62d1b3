"""Exception types raised across the package."""


class HammingCompatError(Exception):
    """Base class for every error raised by this package."""


class UnknownSymbol(HammingCompatError, ValueError):
    def __init__(self, position: int, character: str):
        self.position = position
        self.character = character
        super().__init__(f"unknown symbol {character!r} at position {position}")


class CapExceeded(HammingCompatError):
    def __init__(self, requested: int, cap: int, what: str = "words"):
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"enumeration cap exceeded: {requested} {what} requested, cap is {cap}"
        )


class LengthMismatch(HammingCompatError, ValueError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"words have different lengths ({left} != {right})")


class InvalidParameter(HammingCompatError, ValueError):
    pass


class InvalidAlphabet(HammingCompatError, ValueError):
    pass


class NoLengthBound(HammingCompatError):
    pass


class UnknownMetric(HammingCompatError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown metric"
