"""Dense integer polynomials in one variable ``t`` and the families Q_n, R_k."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .errors import InexactDivision


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> IntPolynomial:
        """Sum of ``t**e`` over ``degrees`` (repeats add up)."""
        out: dict[int, int] = {}
        for e in degrees:
            out[e] = out.get(e, 0) + 1
        return cls.from_dict(out)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> IntPolynomial:
        if not terms:
            return cls()
        top = max(terms)
        cs = [0] * (top + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError("negative degree")
            cs[e] += c
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def low_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient; -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k`` (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def compose_t_power(self, k: int) -> IntPolynomial:
        """Return ``p(t**k)``."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return IntPolynomial(out)

    def divmod(self, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division with remainder; the divisor must be monic up to sign.

        Raises InexactDivision if a quotient coefficient is not integral.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = q.degree
        lead = q.coeffs[-1]
        if len(rem) <= dq:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f, r = divmod(c, lead)
            if r:
                raise InexactDivision(IntPolynomial(rem))
            quot[i - dq] = f
            for j, qc in enumerate(q.coeffs):
                rem[i - dq + j] -= f * qc
        return IntPolynomial(quot), IntPolynomial(rem)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return to_plain(self)


def exact_div(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Return ``r`` with ``p == q * r``; raise InexactDivision otherwise."""
    quot, rem = p.divmod(q)
    if not rem.is_zero():
        raise InexactDivision(rem)
    return quot


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def compose_t_power(p: IntPolynomial, k: int) -> IntPolynomial:
    return p.compose_t_power(k)


T = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ZERO = IntPolynomial()


def r_poly(k: int) -> IntPolynomial:
    """``1 + t + ... + t^k``; zero for negative ``k``."""
    if k < 0:
        return ZERO
    return IntPolynomial([1] * (k + 1))


def q_poly(n: int) -> IntPolynomial:
    """Palindromic polynomial Q_n with coefficients 1, 2, ..., peak, ..., 2, 1.

    Q_{2m} peaks at m+1 in degree m; Q_{2m+1} has the value m+1 in both
    degrees m and m+1. Zero for negative ``n``.
    """
    if n < 0:
        return ZERO
    return IntPolynomial([min(i, n - i) + 1 for i in range(n + 1)])


def geometric_run(start: int, step: int, count: int) -> IntPolynomial:
    """``t^start + t^(start+step) + ... `` with ``count`` terms (zero if count <= 0)."""
    if count <= 0:
        return ZERO
    out = [0] * (start + step * (count - 1) + 1)
    for i in range(count):
        out[start + step * i] += 1
    return IntPolynomial(out)


# --- rendering --------------------------------------------------------------

def to_plain(p: IntPolynomial, var: str = "t") -> str:
    """Render as ``1 + 2*t^9 - t^13``."""
    terms = p.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for idx, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_latex(p: IntPolynomial, var: str = "t") -> str:
    terms = p.terms()
    if not terms:
        return "0"
    parts: list[str] = []
    for idx, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{{{e}}}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if idx == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_json_obj(p: IntPolynomial) -> dict:
    return {"coeffs": list(p.coeffs)}


def to_json(p: IntPolynomial) -> str:
    return json.dumps(to_json_obj(p))


def from_json(text: str | dict) -> IntPolynomial:
    obj = json.loads(text) if isinstance(text, str) else text
    return IntPolynomial(obj["coeffs"])


def render(p: IntPolynomial, fmt: str = "plain") -> str:
    if fmt == "plain":
        return to_plain(p)
    if fmt == "latex":
        return to_latex(p)
    if fmt == "json":
        return to_json(p)
    raise ValueError(f"unknown format {fmt!r}")


def poly_sum(polys: Sequence[IntPolynomial] | Iterable[IntPolynomial]) -> IntPolynomial:
    acc = ZERO
    for p in polys:
        acc = acc + p
    return acc
