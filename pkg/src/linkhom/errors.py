"""Exception types raised by linkhom."""

from __future__ import annotations


class LinkhomError(ValueError):
    """Base class for all domain errors."""


class NonGeneric(LinkhomError):
    """The length vector has a median subset."""

    def __init__(self, witness: frozenset[int]):
        self.witness = witness
        super().__init__(f"length vector is not generic; median subset {sorted(witness)}")


class EmptyModuli(LinkhomError):
    """a_0 = 0, so the moduli space is empty."""

    def __init__(self, msg: str = "moduli space is empty (a_0 = 0)"):
        super().__init__(msg)


class Degenerate(LinkhomError):
    pass


class InexactDivision(LinkhomError):
    def __init__(self, remainder):
        self.remainder = remainder
        super().__init__(f"polynomial division leaves remainder {remainder}")


class OutOfRange(LinkhomError):
    pass


class UnsupportedDimension(LinkhomError):
    pass


class EvenDimension(LinkhomError):
    pass


class OddDimension(LinkhomError):
    pass


class TooShort(LinkhomError):
    pass


class EmptyRange(LinkhomError):
    pass
