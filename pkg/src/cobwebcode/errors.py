"""Exception hierarchy shared by every module of the package."""


class CobwebError(Exception):
    """Base class for all errors raised by cobwebcode."""


class IndexBeyondExplicitList(CobwebError, IndexError):
    def __init__(self, index, length):
        super().__init__(f"index {index} is beyond the explicit sequence of length {length}")
        self.index = index
        self.length = length


class InvalidRange(CobwebError, ValueError):
    pass


class DigitOutOfRange(CobwebError, ValueError):
    def __init__(self, position, digit, radix):
        super().__init__(f"digit {digit} at position {position} is outside 0..{radix - 1}")
        self.position = position
        self.digit = digit
        self.radix = radix


class NonRepresentable(CobwebError, ArithmeticError):
    pass


class OriginMismatch(CobwebError, ValueError):
    pass


class SequenceMismatch(CobwebError, ValueError):
    pass


class ParseError(CobwebError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidPermutation(CobwebError, ValueError):
    pass


class AmbientMismatch(CobwebError, ValueError):
    pass


class SearchLimitExceeded(CobwebError, RuntimeError):
    pass


class NonDivisible(CobwebError, ArithmeticError):
    pass


class UnsupportedDimension(CobwebError, ValueError):
    pass
