"""Euler characteristics of even-dimensional polygon spaces and Morse-type Betti bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .betti import nabla_enumerate
from .errors import EmptyModuli, OddDimension, TooShort
from .lengths import LengthVector, morse_numbers, short_set_stats


def chi_pair_even(d: int, k: int) -> int:
    """Euler characteristic of ``(X^k_d, dX^k_d)`` for even ``d = 2m + 4``."""
    if d % 2:
        raise OddDimension(f"d = {d} is odd")
    if d < 4:
        raise ValueError("d must be >= 4")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    m = (d - 4) // 2
    kk, odd = divmod(k, 2)
    total = 0
    for j in nabla_enumerate(m, 2 * kk - 2 * m - 1):
        j1 = j.j[0] if j.j else 0
        total += 2 * kk - 2 * m - 2 * j1 - (0 if odd else 1)
    sign = (-1) ** m if odd else (-1) ** (m + 1)
    return sign * total


def _checked_stats(ell: LengthVector, min_n: int):
    if ell.n < min_n:
        raise TooShort(f"n must be >= {min_n}")
    stats = short_set_stats(ell)
    if not stats.a0_nonempty:
        raise EmptyModuli()
    return stats


def chi_m4(ell: LengthVector) -> int:
    """Euler characteristic of M_4 from the short-set counts."""
    s = _checked_stats(ell, 5)
    n = ell.n
    k = (n + 1) // 2
    if n == 2 * k:
        return sum((-1) ** i * (s.get(i) - s.get(2 * k - 2 - i)) * (k - 1 - i) for i in range(k - 1))
    return -(k - 3) * sum((-1) ** i * (s.get(i) - s.get(2 * k - 3 - i)) for i in range(k - 1))


def chi_m6(ell: LengthVector) -> int:
    """Euler characteristic of M_6 from ``c_i = a_i - a_{n-2-i}`` (floors round down)."""
    s = _checked_stats(ell, 7)
    n = ell.n
    k = (n + 1) // 2
    twice = 0
    for i in range(k - 1):
        c = s.get(i) - s.get(n - 2 - i)
        if not c:
            continue
        tail = ((i - 3) // 2) * ((i - 1) // 2)
        if n == 2 * k:
            h = i // 2
            twice += (-1) ** (i + 1) * c * ((k - 3 - h) * (k - 2 - h) - tail)
        else:
            h = (i + 1) // 2
            twice += (-1) ** i * c * ((k - 3 - h) * (k - 2 - h) + tail)
    if twice % 2:
        raise ArithmeticError(f"odd numerator {twice} in chi(M6) for {ell}")
    return twice // 2


def chi_filtration(ell: LengthVector, d: int) -> int:
    """``sum_k mu_k chi(X^k_d, dX^k_d)``; additive over the Morse filtration."""
    mu = morse_numbers(ell)
    return sum(mk * chi_pair_even(d, k) for k, mk in enumerate(mu.mu))


def kamiyama_equilateral(m: int) -> int:
    """``chi(M_4)`` of the equilateral ``(2m+1)``-gon: ``(-1)^m (m-2) C(2m-1, m-1)``."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return (-1) ** m * (m - 2) * math.comb(2 * m - 1, m - 1)


@dataclass(frozen=True)
class BettiBound:
    degree: int
    lower: int
    upper: int
    exact_difference: int | None = None  # b_degree - b_(degree+1), when known

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"inconsistent bound {self.lower} > {self.upper}")


def betti_bounds(ell: LengthVector, d: int) -> list[BettiBound]:
    """Betti number estimates for M_4 / M_6 near the top of the Morse filtration.

    Degree ``t`` at the top of ``(X^(n-4)_d, dX^(n-4)_d)`` receives ``c_0 + c_1``
    classes; the final ``X^(n-3)_d`` can cancel ``a_0`` (d=4) or ``2 a_0``
    (d=6) of them, which fixes ``b_t - b_(t+1)``.
    """
    if d not in (4, 6):
        raise ValueError("d must be 4 or 6")
    n = ell.n
    s = _checked_stats(ell, 6 if d == 4 else 9)
    c = [s.get(i) - s.get(n - 2 - i) for i in range(3)]
    a0 = s.get(0)
    out = []
    if d == 4:
        diff = c[0] + c[1] - a0
        out.append(BettiBound(3 * (n - 1) - 10, max(0, diff), c[0] + c[1], diff))
        if n >= 7:
            out.append(BettiBound(3 * (n - 2) - 10, max(0, c[2] - c[1]), c[2] + c[1] + 2 * c[0]))
    else:
        diff = c[0] + c[1] - 2 * a0
        out.append(BettiBound(5 * (n - 1) - 21, max(0, diff), c[0] + c[1], diff))
        if n >= 10:
            out.append(BettiBound(5 * (n - 2) - 21, max(0, c[2] - c[1] - c[0]), c[2] + c[1] + c[0]))
    return out
