"""Exact Betti numbers, Euler characteristics and chamber data for polygon spaces."""

from .errors import (
    Degenerate,
    EmptyModuli,
    EmptyRange,
    EvenDimension,
    InexactDivision,
    LinkhomError,
    NonGeneric,
    OddDimension,
    OutOfRange,
    TooShort,
    UnsupportedDimension,
)
from .lengths import LengthVector
from .poly import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "Degenerate",
    "EmptyModuli",
    "EmptyRange",
    "EvenDimension",
    "InexactDivision",
    "IntPolynomial",
    "LengthVector",
    "LinkhomError",
    "NonGeneric",
    "OddDimension",
    "OutOfRange",
    "TooShort",
    "UnsupportedDimension",
]
