"""Closed-form Poincare polynomials of polygon spaces and of the pairs (X^k_d, dX^k_d)."""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from typing import Iterator

from .errors import EmptyModuli, EvenDimension, TooShort, UnsupportedDimension
from .lengths import (
    ChamberKey,
    LengthVector,
    _normalize,
    chamber_key,
    critical_index_sets,
    morse_numbers,
    require_generic,
    short_set_stats,
    split_vectors,
)
from .poly import ONE, ZERO, IntPolynomial, exact_div, geometric_run, poly_sum, q_poly, r_poly


@dataclass(frozen=True, order=True)
class NablaTuple:
    """Weakly decreasing tuple ``j_1 >= ... >= j_m >= 0``; ``()`` is allowed."""

    j: tuple[int, ...] = ()

    def __post_init__(self):
        if any(x < 0 for x in self.j) or any(a < b for a, b in zip(self.j, self.j[1:])):
            raise ValueError(f"not a weakly decreasing non-negative tuple: {self.j}")

    @property
    def m(self) -> int:
        return len(self.j)

    @property
    def size(self) -> int:
        """``|j|``."""
        return sum(self.j)

    @property
    def norm(self) -> int:
        """``||j|| = 2 j_1 + 1`` (1 for the empty tuple)."""
        return 2 * self.j[0] + 1 if self.j else 1


def _decreasing(m: int, top: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(top + 1):
        for rest in _decreasing(m - 1, first):
            yield (first,) + rest


def nabla_enumerate(m: int, bound: int) -> list[NablaTuple]:
    """All tuples of length ``m`` with ``||j|| <= bound``, in lexicographic order."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if bound < 1:
        return []
    top = (bound - 1) // 2
    return [NablaTuple(t) for t in _decreasing(m, top)]


# --- d = 3 ------------------------------------------------------------------

_p3_cache: dict[ChamberKey, IntPolynomial] = {}
_p3_lock = threading.Lock()


def p3_recursive(ell: LengthVector) -> IntPolynomial:
    """Poincare polynomial of M_3 via the split recursion ``P(l-) + t^2 P(l+) + sum``.

    Each critical set ``J`` contributes ``t^(2(n-3-|J|))``. Results are
    memoized per chamber.
    """
    require_generic(ell)
    return _p3_rec(_normalize(ell))


def _p3_rec(ell: LengthVector) -> IntPolynomial:
    key = chamber_key(ell)
    with _p3_lock:
        hit = _p3_cache.get(key)
    if hit is not None:
        return hit
    n = ell.n
    if not key.a0_nonempty:
        result = ZERO
    elif n == 3:
        result = ONE
    else:
        plus, minus = split_vectors(ell)
        result = _p3_rec(_normalize(minus)) + _p3_rec(_normalize(plus)).shift(2)
        for _, idx in critical_index_sets(ell, 3):
            result = result + IntPolynomial.monomial(idx)
    with _p3_lock:
        _p3_cache[key] = result
    return result


def _short_size_poly(ell: LengthVector) -> IntPolynomial:
    sums = ell.subset_sums()
    total = sums[-1]
    counts = [0] * (ell.n + 1)
    for mask, s in enumerate(sums):
        if 2 * s < total:
            counts[bin(mask).count("1")] += 1
    return IntPolynomial(counts).compose_t_power(2)


def _stats_nonempty(ell: LengthVector):
    stats = short_set_stats(ell)
    if not stats.a0_nonempty:
        raise EmptyModuli()
    return stats


def p3_klyachko(ell: LengthVector) -> IntPolynomial:
    """``((1+t^2)^(n-1) - sum over short J of t^(2|J|)) / (t^2 (t^2 - 1))``."""
    _stats_nonempty(ell)
    num = IntPolynomial([1, 0, 1]) ** (ell.n - 1) - _short_size_poly(ell)
    return exact_div(num, IntPolynomial([0, 0, -1, 0, 1]))


def p3_hausmann_knutson(ell: LengthVector) -> IntPolynomial:
    """``(1/(1-t^2)) sum_k a_k (t^(2k) - t^(2(n-2-k)))``, ``k = |J| - 1`` for ``J`` containing ``n``."""
    stats = _stats_nonempty(ell)
    n = ell.n
    num = ZERO
    for k, ak in enumerate(stats.a):
        if ak:
            num = num + (IntPolynomial.monomial(2 * k) - IntPolynomial.monomial(2 * (n - 2 - k))) * ak
    return exact_div(num, IntPolynomial([1, 0, -1]))


def _half(n: int) -> int:
    return (n + 1) // 2


def p3_closed(ell: LengthVector) -> IntPolynomial:
    """``sum_{i<=m-2} c_i (t^(2i) + ... + t^(2(n-3-i)))``."""
    stats = _stats_nonempty(ell)
    n = ell.n
    out = ZERO
    for i in range(_half(n) - 1):
        c = stats.get(i) - stats.get(n - 2 - i)
        out = out + geometric_run(2 * i, 2, n - 2 - 2 * i) * c
    return out


def p3_r_form(ell: LengthVector) -> IntPolynomial:
    """The same polynomial written as ``1 + t^2 sum c_i (R_{n-4-i}(t^2) - R_{i-2}(t^2))``."""
    stats = _stats_nonempty(ell)
    n = ell.n
    acc = ZERO
    for i in range(_half(n) - 1):
        c = stats.get(i) - stats.get(n - 2 - i)
        acc = acc + (r_poly(n - 4 - i) - r_poly(i - 2)).compose_t_power(2) * c
    return ONE + acc.shift(2)


# --- pairs (X^k_d, dX^k_d) ----------------------------------------------------

def u_shift(k: int, m: int) -> int:
    """Lowest degree of ``P^k_(2m+5)``."""
    return (2 * m + 4) * k - (2 * m + 3) * (m + 1) - 4 * (m + 1) * ((k - 2 * m - 3) // 2)


@functools.lru_cache(maxsize=None)
def pair_poincare(d: int, k: int) -> IntPolynomial:
    """Rational Poincare polynomial of the pair ``(X^k_d, dX^k_d)``.

    ``X^0_d`` is a point with empty boundary, so ``k = 0`` gives 1. For
    ``0 < k < d - 2`` the pair collapses and the result is 0.
    """
    if d < 4:
        raise UnsupportedDimension(f"d = {d} < 4")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ONE
    if d % 2 == 0:
        m = (d - 4) // 2
        terms = []
        for j in nabla_enumerate(m, k - 2 * m - 1):
            count = k - 2 * m - j.norm
            terms.append(geometric_run(4 * j.size, 2 * m + 2, count))
        return poly_sum(terms).shift(k + (m + 1) * (2 * m + 3))
    m = (d - 5) // 2
    terms = []
    for j in nabla_enumerate(m, k - 2 * m - 2):
        count = (k - 2 * m - j.norm) // 2
        terms.append(geometric_run(4 * j.size, 4 * (m + 1), count))
    total = poly_sum(terms)
    if total.is_zero():
        return total
    return total.shift(u_shift(k, m))


def pair_poincare_closed(d: int, k: int) -> IntPolynomial:
    """The specialized closed forms for ``d`` in 4..7."""
    if d not in (4, 5, 6, 7):
        raise UnsupportedDimension(f"closed form only for d in 4..7, got {d}")
    if k < d - 2:
        return ONE if k == 0 else ZERO
    if d == 4:
        return geometric_run(k + 3, 2, k - 1)
    if d == 5:
        return geometric_run(4 * k - 4 * ((k - 3) // 2) - 3, 4, (k - 1) // 2)
    if d == 6:
        return q_poly(k - 4).compose_t_power(4).shift(k + 10)
    M = (k - 5) // 2
    body = q_poly(M).compose_t_power(8) + q_poly(M - 1).compose_t_power(8).shift(4)
    return body.shift(6 * k - 8 * M - 10)


def poincare_odd(ell: LengthVector, d: int) -> IntPolynomial:
    """Rational Poincare polynomial of M_d for odd ``d >= 5``: ``sum_k mu_k P^k_d``."""
    if d % 2 == 0:
        raise EvenDimension(f"d = {d} is even; the Morse filtration does not split")
    if d < 5:
        raise UnsupportedDimension("use the d = 3 formulas")
    mu = morse_numbers(ell)
    out = ZERO
    for k, mk in enumerate(mu.mu):
        if mk:
            out = out + pair_poincare(d, k) * mk
    return out


def p5_closed(ell: LengthVector) -> IntPolynomial:
    """``1 + t^9 sum_{i<=m-2} c_i (Q_{n-6-i}(t^4) - Q_{i-4}(t^4))``."""
    if ell.n < 5:
        raise TooShort("n must be >= 5")
    stats = _stats_nonempty(ell)
    n = ell.n
    acc = ZERO
    for i in range(_half(n) - 1):
        c = stats.get(i) - stats.get(n - 2 - i)
        if c:
            acc = acc + (q_poly(n - 6 - i) - q_poly(i - 4)).compose_t_power(4) * c
    return ONE + acc.shift(9)


@dataclass(frozen=True)
class DimInfo:
    n: int
    d: int
    dimension: int
    connectivity: int
    sphere_dimension: int | None


def dim_and_connectivity(n: int, d: int) -> DimInfo:
    """Dimension of M_d for ``n`` sides, its connectivity, and the sphere case ``d = n - 1``."""
    if n < 3 or d < 3:
        raise ValueError("need n >= 3 and d >= 3")
    dd = min(n, d)
    dim = (n - 3) * (dd - 1) - (dd - 2) * (dd - 3) // 2
    conn = (d - 1) * (d - 2) // 2 + d - 3
    sphere = n * (n - 3) // 2 if d == n - 1 else None
    return DimInfo(n, d, dim, conn, sphere)
