"""Exception hierarchy shared by every twinrep module."""


class TwinRepError(Exception):
    pass


# ring

class NonUnitNegativePower(TwinRepError, ArithmeticError):
    pass


class DivisionByZero(TwinRepError, ZeroDivisionError):
    pass


class ZeroSpecialization(TwinRepError, ValueError):
    pass


class PoleAtPoint(TwinRepError, ValueError):
    pass


class ParseError(TwinRepError, ValueError):
    """Malformed input string; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


# free groups / presentations

class IndexOutOfRange(TwinRepError, IndexError):
    pass


class RankMismatch(TwinRepError, ValueError):
    pass


class BadStrandCount(TwinRepError, ValueError):
    pass


class KindMismatch(TwinRepError, ValueError):
    pass


# representations

class BlockStructureViolation(TwinRepError, AssertionError):
    pass


class ZeroScalar(TwinRepError, ValueError):
    pass


class BadFamilyTag(TwinRepError, ValueError):
    pass


# analysis

class NotInvolution(TwinRepError, ValueError):
    pass


class UnclassifiableInvolution(TwinRepError, ValueError):
    pass


class DegreeMismatch(TwinRepError, ValueError):
    pass


class CriterionMismatch(TwinRepError, AssertionError):
    pass
