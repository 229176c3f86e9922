"""Exact combinatorics of length vectors.

Subsets of ``{1, ..., n}`` are handled internally as integer bitmasks, bit
``i - 1`` standing for index ``i``. Public functions take and return 1-based
index sets.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .errors import Degenerate, EmptyModuli, NonGeneric, OutOfRange


class SubsetClass(enum.Enum):
    SHORT = "short"
    LONG = "long"
    MEDIAN = "median"


@dataclass(frozen=True)
class LengthVector:
    """Positive rational side lengths ``(l_1, ..., l_n)``."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        vals = tuple(Fraction(e) if not isinstance(e, str) else Fraction(e.strip()) for e in entries)
        if len(vals) < 2:
            raise ValueError("a length vector needs at least 2 entries")
        for i, v in enumerate(vals, 1):
            if v <= 0:
                raise ValueError(f"entry {i} is not positive: {v}")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def parse(cls, text: str) -> LengthVector:
        """Parse ``"1,1,1,3"``, ``"1/2,3/2,2"`` or ``"1.25,2"`` exactly."""
        tokens = text.split(",")
        vals = []
        pos = 0
        for i, tok in enumerate(tokens, 1):
            try:
                v = Fraction(tok.strip())
            except (ValueError, ZeroDivisionError):
                raise ValueError(
                    f"cannot parse entry {i} ({tok.strip()!r}) at character {pos}"
                ) from None
            if v <= 0:
                raise ValueError(f"entry {i} at character {pos} is not positive: {tok.strip()}")
            vals.append(v)
            pos += len(tok) + 1
        return cls(vals)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)

    def sorted(self) -> LengthVector:
        return LengthVector(sorted(self.entries))

    def permuted(self, perm: Sequence[int]) -> LengthVector:
        """Entry ``i`` of the result is entry ``perm[i]`` of ``self`` (0-based)."""
        return LengthVector(self.entries[p] for p in perm)

    def scaled(self) -> tuple[int, ...]:
        return _scaled(self.entries)

    def subset_sums(self) -> list[int]:
        return _subset_sums(self.scaled())


@functools.lru_cache(maxsize=4096)
def _scaled(entries: tuple[Fraction, ...]) -> tuple[int, ...]:
    den = 1
    for e in entries:
        den = den * e.denominator // math.gcd(den, e.denominator)
    return tuple(int(e * den) for e in entries)


def _subset_sums(weights: Sequence[int]) -> list[int]:
    sums = [0] * (1 << len(weights))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return sums


def to_mask(J: Iterable[int], n: int) -> int:
    mask = 0
    for i in J:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _sign_of(sums: list[int], total: int, mask: int) -> int:
    # negative: short, positive: long, zero: median
    return 2 * sums[mask] - total


def classify_subset(ell: LengthVector, J: Iterable[int]) -> SubsetClass:
    w = ell.scaled()
    mask = to_mask(J, ell.n)
    s = 2 * sum(w[i] for i in range(ell.n) if mask >> i & 1) - sum(w)
    if s < 0:
        return SubsetClass.SHORT
    if s > 0:
        return SubsetClass.LONG
    return SubsetClass.MEDIAN


def median_witness(ell: LengthVector) -> frozenset[int] | None:
    sums = ell.subset_sums()
    total = sums[-1]
    if total % 2:
        return None
    half = total // 2
    for mask, s in enumerate(sums):
        if s == half:
            return from_mask(mask)
    return None


def is_generic(ell: LengthVector) -> tuple[bool, frozenset[int] | None]:
    """``(True, None)`` if no median subset exists, else ``(False, witness)``."""
    w = median_witness(ell)
    return (w is None, w)


def require_generic(ell: LengthVector) -> None:
    w = median_witness(ell)
    if w is not None:
        raise NonGeneric(w)


def dominating_indices(ell: LengthVector) -> list[int]:
    top = max(ell.entries)
    return [i for i, v in enumerate(ell.entries, 1) if v == top]


@dataclass(frozen=True)
class ShortSetStats:
    dominating_index: int
    a: tuple[int, ...]

    @property
    def a0_nonempty(self) -> bool:
        return self.a[0] == 1

    def get(self, k: int) -> int:
        """``a_k`` with the convention ``a_k = 0`` outside ``0..n-3``."""
        return self.a[k] if 0 <= k < len(self.a) else 0


def short_set_stats(ell: LengthVector, dominating: int | None = None) -> ShortSetStats:
    """Count short sets containing a dominating index, by size.

    ``a[k]`` is the number of short ``J`` with ``m in J`` and ``|J| = k + 1``.
    """
    require_generic(ell)
    n = ell.n
    if dominating is None:
        dominating = dominating_indices(ell)[-1]
    elif dominating not in dominating_indices(ell):
        raise ValueError(f"index {dominating} is not dominating")
    sums = ell.subset_sums()
    total = sums[-1]
    mbit = 1 << (dominating - 1)
    a = [0] * max(n - 2, 1)
    for mask in range(len(sums)):
        if mask & mbit and 2 * sums[mask] < total:
            k = mask.bit_count() - 1 if hasattr(mask, "bit_count") else bin(mask).count("1") - 1
            a[k] += 1
    return ShortSetStats(dominating, tuple(a))


def _c_coeffs(stats: ShortSetStats, n: int) -> list[int]:
    m = (n + 1) // 2
    return [stats.get(i) - stats.get(n - 2 - i) for i in range(m - 1)]


def c_coefficients(ell: LengthVector) -> list[int]:
    """``c_i = a_i - a_{n-2-i}`` for ``i = 0..m-2`` with ``m = floor((n+1)/2)``."""
    stats = short_set_stats(ell)
    cs = _c_coeffs(stats, ell.n)
    if stats.a0_nonempty and any(c < 0 for c in cs):
        raise RuntimeError(f"negative c_i {cs} for {ell}; this is a bug")
    return cs


@dataclass(frozen=True)
class MorseNumbers:
    mu: tuple[int, ...]

    def get(self, k: int) -> int:
        return self.mu[k] if 0 <= k < len(self.mu) else 0


def morse_numbers(ell: LengthVector) -> MorseNumbers:
    """Critical point counts ``mu_0..mu_{n-3}`` of the perfect Morse function on M_3."""
    stats = short_set_stats(ell)
    if not stats.a0_nonempty:
        raise EmptyModuli()
    n = ell.n
    cs = c_coefficients(ell)
    mu = [0] * (n - 2)
    acc = 0
    for k, c in enumerate(cs):
        acc += c
        mu[k] = acc
    for k in range(len(cs), n - 2):
        mu[k] = mu[n - 3 - k]
    return MorseNumbers(tuple(mu))


def split_vectors(ell: LengthVector) -> tuple[LengthVector, LengthVector]:
    """The vectors ``l+`` and ``l-`` obtained by merging the last two sides.

    Requires the last entry to be strictly the largest. Both results are
    returned sorted ascending.
    """
    e = ell.entries
    if ell.n < 3:
        raise ValueError("need n >= 3")
    if any(v > e[-1] for v in e):
        raise ValueError("the last entry must be a dominating one")
    if e[-1] == e[-2]:
        raise Degenerate("last two entries coincide; perturb first")
    head = list(e[:-2])
    plus = LengthVector(sorted(head + [e[-1] + e[-2]]))
    minus = LengthVector(sorted(head + [e[-1] - e[-2]]))
    return plus, minus


def min_gap(ell: LengthVector) -> int:
    """Smallest nonzero ``|l_J - l_{J^c}|`` in scaled integer units."""
    sums = ell.subset_sums()
    total = sums[-1]
    return min(abs(2 * s - total) for s in sums if 2 * s != total)


def perturb_to_distinct(ell: LengthVector) -> LengthVector:
    """A representative of the same chamber with pairwise distinct entries.

    Entry of rank ``r`` (1-based, stable ascending order) is moved by
    ``delta * 2^r`` where ``delta`` is the minimal subset-sum gap over
    ``2^(n+2)``, so no comparison ``l_J`` vs ``l_{J^c}`` changes sign.
    """
    require_generic(ell)
    if len(set(ell.entries)) == ell.n:
        return ell
    n = ell.n
    w = ell.scaled()
    den = ell.entries[0] / w[0]  # entries == w * den
    g = min_gap(ell)
    order = sorted(range(n), key=lambda i: w[i])
    scale = 1 << (n + 2)
    out = [0] * n
    for rank, i in enumerate(order, 1):
        out[i] = w[i] * scale + g * (1 << rank)
    return LengthVector(Fraction(v) * den / scale for v in out)


def _normalize(ell: LengthVector) -> LengthVector:
    """Sorted ascending, perturbed to distinct entries."""
    return perturb_to_distinct(ell.sorted())


def critical_index_sets(ell: LengthVector, d: int) -> list[tuple[frozenset[int], int]]:
    """Sets ``J`` of ``{1..n-2}`` with ``J+{n}`` short and ``J+{n-1,n}`` long.

    Each comes with its Morse index ``(n - 3 - |J|)(d - 1)``. The last entry of
    ``ell`` must be a dominating one.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    require_generic(ell)
    n = ell.n
    e = ell.entries
    if any(v > e[-1] for v in e):
        raise ValueError("the last entry must be a dominating one")
    sums = ell.subset_sums()
    total = sums[-1]
    top = 1 << (n - 1)
    second = 1 << (n - 2)
    out = []
    for mask in range(1 << (n - 2)):
        if 2 * sums[mask | top] < total and 2 * sums[mask | top | second] > total:
            size = bin(mask).count("1")
            out.append((from_mask(mask), (n - 3 - size) * (d - 1)))
    out.sort(key=lambda item: (len(item[0]), sorted(item[0])))
    return out


@dataclass(frozen=True)
class CriticalPoint:
    source: LengthVector
    subset: frozenset[int] | None  # None: the single point of a 3-gon space
    index: int


def morse_critical_points(ell: LengthVector, d: int = 3) -> list[CriticalPoint]:
    """Critical points of the perfect Morse(-Bott) function, found recursively.

    The minimum ``M(l-)`` keeps its indices, the maximum ``M(l+)`` shifts them
    by ``d - 1``, and each set of ``critical_index_sets`` adds one point.
    """
    require_generic(ell)
    return _crit_points(_normalize(ell), d, 0)


def _crit_points(ell: LengthVector, d: int, shift: int) -> list[CriticalPoint]:
    n = ell.n
    stats = short_set_stats(ell)
    if not stats.a0_nonempty:
        return []
    if n == 3:
        return [CriticalPoint(ell, None, shift)]
    plus, minus = split_vectors(ell)
    pts = _crit_points(_normalize(minus), d, shift)
    pts += [CriticalPoint(ell, J, idx + shift) for J, idx in critical_index_sets(ell, d)]
    pts += _crit_points(_normalize(plus), d, shift + d - 1)
    return pts


# --- chambers ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ChamberKey:
    """Chamber of a generic vector up to permutation.

    ``short_sets`` lists bitmasks ``A`` over the first ``n - 1`` positions of
    the ascending-sorted vector such that ``A + {n}`` is short. The short-set
    system of a sorted generic vector is determined by its chamber up to
    permutation, so this is canonical.
    """

    n: int
    short_sets: tuple[int, ...]
    witness: LengthVector | None = field(default=None, compare=False, hash=False, repr=False)

    @property
    def a(self) -> tuple[int, ...]:
        a = [0] * max(self.n - 2, 1)
        for mask in self.short_sets:
            a[bin(mask).count("1")] += 1
        return tuple(a)

    @property
    def a0_nonempty(self) -> bool:
        return bool(self.short_sets)

    def short_family(self) -> list[frozenset[int]]:
        """The short sets containing ``n``, as 1-based index sets."""
        top = 1 << (self.n - 1)
        return [from_mask(m | top) for m in self.short_sets]


def chamber_key(ell: LengthVector) -> ChamberKey:
    require_generic(ell)
    s = ell.sorted()
    n = s.n
    sums = s.subset_sums()
    total = sums[-1]
    top = 1 << (n - 1)
    shorts = tuple(m for m in range(top) if 2 * sums[m | top] < total)
    return ChamberKey(n, shorts, ell)


def short_set_system(ell: LengthVector) -> frozenset[int]:
    """All short subsets of ``ell`` as bitmasks (no canonicalization)."""
    sums = ell.subset_sums()
    total = sums[-1]
    return frozenset(m for m, s in enumerate(sums) if 2 * s < total)


MAX_CHAMBER_N = 8


def enumerate_chambers(n: int, require_nonempty: bool = False, *, force: bool = False) -> list[ChamberKey]:
    """All chambers of generic length vectors in R^n up to permutation.

    Short/long decisions for the sets ``A + {n}`` (``A`` a subset of the first
    ``n - 1`` positions of a sorted vector) are made in increasing bitmask
    order. Sets below a long set in the subset/shift order are forced long, as
    is ``A + {n}`` when the complementary ``(A^c) + {n}`` is short. Free
    decisions are checked for realizability with an exact LP, reusing the
    parent's witness when it already decides the new set.
    """
    if n < 3:
        raise OutOfRange("n must be >= 3")
    if n > MAX_CHAMBER_N and not force:
        raise OutOfRange(f"n = {n} exceeds {MAX_CHAMBER_N}; pass force=True to run anyway")
    N = n - 1
    full = (1 << N) - 1
    count = 1 << N
    status = [0] * count  # +1 short, -1 long, 0 undecided
    results: list[ChamberKey] = []
    constraints: list[tuple[int, int]] = []  # (mask over n positions, sign)
    start = tuple(Fraction(1 << i) for i in range(n))

    def margin(w, mask_n: int) -> Fraction:
        # l_{S^c} - l_S for S = mask_n (positive: short)
        s = sum(w[i] for i in range(n) if mask_n >> i & 1)
        return sum(w) - 2 * s

    def forced_long(A: int) -> bool:
        comp = full ^ A
        if comp < A and status[comp] == 1:
            return True
        b = A
        while b:
            low = b & -b
            if status[A ^ low] == -1:
                return True
            pos = low.bit_length() - 1
            if pos > 0 and not (A >> (pos - 1)) & 1:
                if status[A ^ low ^ (low >> 1)] == -1:
                    return True
            b ^= low
        return False

    def solve() -> tuple[Fraction, ...] | None:
        nv = n + 1  # l_1..l_n, eps
        rows, rhs = [], []
        for mask_n, sign in constraints:
            # sign=+1 (short): eps + l_S - l_{S^c} <= 0 ; sign=-1: eps - l_S + l_{S^c} <= 0
            row = [(sign if mask_n >> i & 1 else -sign) for i in range(n)] + [1]
            rows.append(row)
            rhs.append(0)
        for i in range(n - 1):
            row = [0] * nv
            row[i], row[i + 1] = 1, -1
            rows.append(row)
            rhs.append(0)
        row = [0] * nv
        row[0], row[n] = -1, 1
        rows.append(row)
        rhs.append(0)
        rows.append([1] * n + [0])
        rhs.append(1)
        res = lp.maximize([0] * n + [1], rows, rhs)
        if res.status != "optimal" or res.value <= 0:
            return None
        return res.x[:n]

    top = 1 << N

    def rec(A: int, w: tuple[Fraction, ...]) -> None:
        if A == count:
            shorts = tuple(m for m in range(count) if status[m] == 1)
            if require_nonempty and not shorts:
                return
            den = 1
            for v in w:
                den = den * v.denominator // math.gcd(den, v.denominator)
            ints = [int(v * den) for v in w]
            g = 0
            for v in ints:
                g = math.gcd(g, v)
            results.append(ChamberKey(n, shorts, LengthVector(v // g for v in ints)))
            return
        if forced_long(A):
            status[A] = -1
            rec(A + 1, w)
            status[A] = 0
            return
        mask_n = A | top
        mw = margin(w, mask_n)
        for sign in (1, -1):
            if mw * sign > 0:
                child_w = w
            else:
                constraints.append((mask_n, sign))
                child_w = solve()
                constraints.pop()
                if child_w is None:
                    continue
            constraints.append((mask_n, sign))
            status[A] = sign
            rec(A + 1, child_w)
            status[A] = 0
            constraints.pop()

    rec(0, start)
    results.sort()
    return results


def chamber_key_bruteforce(ell: LengthVector) -> tuple[int, tuple[int, ...]]:
    """Lexicographically least image of the full short-set system over all permutations.

    Exponential in ``n``; used as an independent canonicalization check.
    """
    require_generic(ell)
    n = ell.n
    system = short_set_system(ell)
    best = None
    for perm in itertools.permutations(range(n)):
        image = []
        for mask in system:
            m2 = 0
            for i in range(n):
                if mask >> i & 1:
                    m2 |= 1 << perm[i]
            image.append(m2)
        cand = tuple(sorted(image))
        if best is None or cand < best:
            best = cand
    return (n, best)
