"""Cells of (X^k_d, dX^k_d) as symbolic matrices, the complexes E(m, j), and their homology."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable

from .betti import nabla_enumerate
from .errors import EmptyRange
from .poly import IntPolynomial
from .snf import invariant_factors

ZERO_E, PLUS, STAR = "0", "+", "*"


# --- symbolic matrices --------------------------------------------------------

@dataclass(frozen=True, order=True)
class SymbolicMatrix:
    """Grid over ``{0, +, *}``; ``grid[r][c]`` is row ``r + 1``, column ``c + 1``."""

    grid: tuple[str, ...]

    def __post_init__(self):
        if not self.grid or any(len(r) != len(self.grid[0]) for r in self.grid):
            raise ValueError("ragged or empty grid")
        if any(ch not in "0+*" for r in self.grid for ch in r):
            raise ValueError("entries must be 0, + or *")

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def cols(self) -> int:
        return len(self.grid[0])

    def row(self, i: int) -> str:
        """Row ``i`` (1-based)."""
        return self.grid[i - 1]

    def nonzero_count(self) -> int:
        return sum(ch != ZERO_E for r in self.grid for ch in r)

    def cell_dimension(self) -> int:
        """``k`` plus the number of nonzero entries."""
        return self.cols + self.nonzero_count()

    def plus_positions(self) -> list[int]:
        """1-based column of the ``+`` in each nonzero row among the first ``rows - 1``."""
        out = []
        for r in self.grid[:-1]:
            idx = r.find(PLUS)
            if idx < 0:
                break
            out.append(idx + 1)
        return out

    def __str__(self):
        return "\n".join(" ".join(r) for r in self.grid)

    @classmethod
    def from_positions(cls, rows: int, cols: int, plus: Iterable[int]) -> SymbolicMatrix:
        """Matrix in S_c with ``+`` at the given columns in rows 1, 2, ...

        If all ``rows - 1`` upper rows are used, the last row is ``*`` right of
        the final ``+``; otherwise the remaining rows are zero.
        """
        ps = list(plus)
        grid = []
        for p in ps:
            grid.append(ZERO_E * (p - 1) + PLUS + STAR * (cols - p))
        while len(grid) < rows - 1:
            grid.append(ZERO_E * cols)
        if len(ps) == rows - 1 and ps:
            p = ps[-1]
            grid.append(ZERO_E * p + STAR * (cols - p))
        else:
            grid.append(ZERO_E * cols)
        return cls(tuple(grid))


def _row_start(r: str) -> int | None:
    for i, ch in enumerate(r):
        if ch != ZERO_E:
            return i
    return None


def in_S(A: SymbolicMatrix) -> bool:
    """Shape rules of S(k, rows): echelon rows ``0..0 + *..*`` and a last row ``0..0 *..*``."""
    starts = []
    for r in A.grid[:-1]:
        s = _row_start(r)
        if s is None:
            if r.strip(ZERO_E):
                return False
            starts.append(None)
            continue
        if r[s] != PLUS or any(ch != STAR for ch in r[s + 1:]):
            return False
        starts.append(s)
    last = A.grid[-1]
    s = _row_start(last)
    if s is not None:
        if any(ch != STAR for ch in last[s:]):
            return False
    starts.append(s)
    seen_zero = False
    prev = -1
    for s in starts:
        if s is None:
            seen_zero = True
            continue
        if seen_zero or s <= prev:
            return False
        prev = s
    return True


def in_Sc(A: SymbolicMatrix) -> bool:
    """S(k, rows) with the last two rows ``(0..0 + *..*; 0..0 0 *..*)`` or both zero."""
    if A.rows < 2 or not in_S(A):
        return False
    r1, r2 = A.grid[-2], A.grid[-1]
    s1 = _row_start(r1)
    if s1 is None:
        return _row_start(r2) is None
    return r2 == ZERO_E * (s1 + 1) + STAR * (A.cols - s1 - 1)


def in_S_i(A: SymbolicMatrix, i: int) -> bool:
    """Member of S^(i): in S_c with row ``i`` zero or ``(0..0 +)``; ``i = 0`` is empty."""
    if i == 0:
        return False
    if not in_Sc(A):
        return False
    r = A.row(i)
    return r == ZERO_E * A.cols or r == ZERO_E * (A.cols - 1) + PLUS


def enum_cells(d: int, k: int) -> list[SymbolicMatrix]:
    """All of S_c(d-2, k), built row by row from the ``+`` positions."""
    if d < 4:
        raise ValueError("d must be >= 4")
    if k < 1:
        raise ValueError("k must be >= 1")
    R = d - 2
    out = []
    for t in range(R):
        for ps in itertools.combinations(range(1, k + 1), t):
            out.append(SymbolicMatrix.from_positions(R, k, ps))
    out.sort(key=lambda A: (A.cell_dimension(), A.grid))
    return out


def enum_cells_bruteforce(d: int, k: int) -> list[SymbolicMatrix]:
    """Filter all ``3^((d-2)k)`` grids by ``in_Sc``; tiny cases only."""
    R = d - 2
    out = []
    for cells in itertools.product("0+*", repeat=R * k):
        grid = tuple("".join(cells[r * k:(r + 1) * k]) for r in range(R))
        A = SymbolicMatrix(grid)
        if in_Sc(A):
            out.append(A)
    out.sort(key=lambda A: (A.cell_dimension(), A.grid))
    return out


def collapse_pairing(d: int, k: int, i: int) -> list[tuple[SymbolicMatrix, SymbolicMatrix]]:
    """Pairs ``(A, A')`` in S^(i) minus S^(i-1): row ``i`` zero in ``A`` and ``(0..0 +)`` in ``A'``."""
    if not 1 <= i <= d - 3:
        raise ValueError("need 1 <= i <= d - 3")
    cells = [A for A in enum_cells(d, k) if in_S_i(A, i) and not in_S_i(A, i - 1)]
    zero_row = ZERO_E * k
    plus_row = ZERO_E * (k - 1) + PLUS
    by_grid = {A.grid: A for A in cells}
    pairs = []
    for A in cells:
        if A.row(i) == zero_row:
            g = list(A.grid)
            g[i - 1] = plus_row
            partner = by_grid.get(tuple(g))
            if partner is None:
                raise RuntimeError(f"unmatched cell\n{A}")
            pairs.append((A, partner))
    if 2 * len(pairs) != len(cells):
        raise RuntimeError("collapse pairing is not perfect")
    return pairs


def d_generator_data(A: SymbolicMatrix, d: int) -> tuple[int, DecSeq]:
    """For a cell of S_c outside S^(d-3), its summand ``j`` and sequence in E(d-4, j)."""
    k = A.cols
    ps = A.plus_positions()
    if len(ps) != d - 3 or ps[-1] == k:
        raise ValueError("cell lies in S^(d-3)")
    r = [k - p + 1 for p in ps]
    j = k - d + 5 - r[-1]
    return j, DecSeq(tuple(x - r[-1] for x in r[:-1]))


# --- the complexes E(m, j) ---------------------------------------------------

@dataclass(frozen=True, order=True)
class DecSeq:
    """Strictly decreasing positive integers ``k_1 > ... > k_m``."""

    k: tuple[int, ...]

    def __post_init__(self):
        if any(x < 1 for x in self.k) or any(a <= b for a, b in zip(self.k, self.k[1:])):
            raise ValueError(f"not strictly decreasing positive: {self.k}")

    @property
    def m(self) -> int:
        return len(self.k)

    @property
    def degree(self) -> int:
        m = len(self.k)
        return sum(self.k) - m * (m + 1) // 2

    def label(self) -> str:
        return "(" + ",".join(map(str, self.k)) + ")"


@dataclass
class ChainComplex:
    """Free graded complex; ``boundary[q]`` maps degree ``q`` to degree ``q - 1``.

    ``boundary[q][(r, c)]`` is the coefficient of generator ``r`` of degree
    ``q - 1`` in the boundary of generator ``c`` of degree ``q``.
    """

    generators: dict[int, list[str]]
    boundary: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    def __post_init__(self):
        self.check()

    def degrees(self) -> list[int]:
        return sorted(q for q, g in self.generators.items() if g)

    def rank(self, q: int) -> int:
        return len(self.generators.get(q, ()))

    def dense(self, q: int) -> list[list[int]]:
        rows, cols = self.rank(q - 1), self.rank(q)
        mat = [[0] * cols for _ in range(rows)]
        for (r, c), v in self.boundary.get(q, {}).items():
            mat[r][c] = v
        return mat

    def check(self) -> None:
        """Verify that the boundary of a boundary vanishes."""
        for q in self.boundary:
            if q - 1 not in self.boundary:
                continue
            outer = self.boundary[q - 1]
            comp: dict[tuple[int, int], int] = {}
            by_row: dict[int, list[tuple[int, int]]] = {}
            for (r, c), v in outer.items():
                by_row.setdefault(c, []).append((r, v))
            for (mid, c), v in self.boundary[q].items():
                for r, w in by_row.get(mid, ()):
                    comp[(r, c)] = comp.get((r, c), 0) + v * w
            bad = {key: v for key, v in comp.items() if v}
            if bad:
                raise ArithmeticError(f"boundary squared is nonzero in degree {q}: {bad}")

    def euler_characteristic(self, shift: int = 0) -> int:
        return sum((-1) ** (q + shift) * len(g) for q, g in self.generators.items())

    def to_json_obj(self) -> dict:
        return {
            "generators": {str(q): self.generators[q] for q in self.degrees()},
            "boundary": {
                str(q): sorted([r, c, v] for (r, c), v in self.boundary[q].items() if v)
                for q in sorted(self.boundary)
                if any(self.boundary[q].values())
            },
        }


def build_E(m: int, j: int) -> ChainComplex:
    """Generators: strictly decreasing ``k_1 > ... > k_m >= 1`` with ``k_1 <= m + j - 1``."""
    if m < 0 or j < 1:
        raise ValueError("need m >= 0 and j >= 1")
    top = m + j - 1
    seqs = [DecSeq(tuple(sorted(c, reverse=True))) for c in itertools.combinations(range(1, top + 1), m)]
    seqs.sort(key=lambda s: (s.degree, s.k))
    by_deg: dict[int, list[DecSeq]] = {}
    for s in seqs:
        by_deg.setdefault(s.degree, []).append(s)
    index = {s.k: i for q in by_deg for i, s in enumerate(by_deg[q])}
    boundary: dict[int, dict[tuple[int, int], int]] = {}
    for q, gens in by_deg.items():
        entries: dict[tuple[int, int], int] = {}
        for c, s in enumerate(gens):
            prefix = 0
            for p, kp in enumerate(s.k):
                coef = (-1) ** prefix * (1 + (-1) ** kp)
                prefix += kp
                if not coef:
                    continue
                new = list(s.k)
                new[p] -= 1
                if new[p] == 0 or (p + 1 < len(new) and new[p] == new[p + 1]):
                    continue
                r = index[tuple(new)]
                entries[(r, c)] = entries.get((r, c), 0) + coef
        if q - 1 in by_deg or entries:
            boundary[q] = entries
    gens = {q: [s.label() for s in g] for q, g in by_deg.items()}
    return ChainComplex(gens, boundary)


def relative_shift(d: int, k: int, j: int) -> int:
    return (d - 1) * k - (d - 2) * (d - 3) // 2 - (d - 2) * (j - 1)


@dataclass(frozen=True)
class RelativeSummand:
    j: int
    shift: int
    complex: ChainComplex


def build_relative(d: int, k: int) -> list[RelativeSummand]:
    """The summands ``E(d-4, j)`` shifted by ``u`` whose sum computes ``H(X^k_d, dX^k_d)``."""
    if d < 4:
        raise ValueError("d must be >= 4")
    if k < d - 2:
        raise EmptyRange(f"k = {k} < d - 2 = {d - 2}: the pair collapses")
    return [RelativeSummand(j, relative_shift(d, k, j), build_E(d - 4, j)) for j in range(1, k - d + 4)]


# --- homology ----------------------------------------------------------------

@dataclass(frozen=True)
class GradedAbelianGroup:
    """``groups[q] = (free rank, torsion invariant factors)``, nonzero degrees only."""

    groups: dict[int, tuple[int, tuple[int, ...]]]

    def free_rank(self, q: int) -> int:
        return self.groups.get(q, (0, ()))[0]

    def torsion(self, q: int) -> tuple[int, ...]:
        return self.groups.get(q, (0, ()))[1]

    def is_zero(self) -> bool:
        return not self.groups

    def shifted(self, u: int) -> GradedAbelianGroup:
        return GradedAbelianGroup({q + u: g for q, g in self.groups.items()})

    def rational_poincare(self) -> IntPolynomial:
        return IntPolynomial.from_dict({q: r for q, (r, _) in self.groups.items() if r})

    def torsion_primes(self) -> set[int]:
        return {t for _, ts in self.groups.values() for t in ts}

    def describe(self) -> str:
        parts = []
        for q in sorted(self.groups):
            r, ts = self.groups[q]
            terms = ["Z" if r == 1 else f"Z^{r}"] if r else []
            terms += [f"Z/{t}" for t in ts]
            parts.append(f"H_{q} = " + " + ".join(terms))
        return "; ".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {str(q): {"free": r, "torsion": list(ts)} for q, (r, ts) in sorted(self.groups.items())}


def homology(c: ChainComplex) -> GradedAbelianGroup:
    """Integral homology by Smith normal form of every boundary map."""
    factors = {q: invariant_factors(c.dense(q)) for q in c.boundary if c.rank(q) and c.rank(q - 1)}
    out = {}
    for q in c.degrees():
        rank_out = len(factors.get(q, ()))
        inc = factors.get(q + 1, ())
        free = c.rank(q) - rank_out - len(inc)
        tors = tuple(x for x in inc if x > 1)
        if free or tors:
            out[q] = (free, tors)
    return GradedAbelianGroup(out)


def relative_homology(d: int, k: int) -> GradedAbelianGroup:
    """``H(X^k_d, dX^k_d)`` as the direct sum of the shifted ``H(E(d-4, j))``."""
    if k == 0:
        return GradedAbelianGroup({0: (1, ())})
    if k < d - 2:
        return GradedAbelianGroup({})
    total: dict[int, tuple[int, tuple[int, ...]]] = {}
    for s in build_relative(d, k):
        for q, (r, ts) in homology(s.complex).shifted(s.shift).groups.items():
            r0, t0 = total.get(q, (0, ()))
            total[q] = (r0 + r, tuple(sorted(t0 + ts)))
    return GradedAbelianGroup(total)


def rational_basis_generators(m: int, j: int) -> list[tuple[DecSeq, int]]:
    """Sequences whose classes form a basis of ``H(E(m, j); Q)``, with their degrees."""
    if m < 0 or j < 1:
        raise ValueError("need m >= 0 and j >= 1")
    half, odd = divmod(m, 2)
    if odd and j % 2 == 0:
        return []
    out = []
    for t in nabla_enumerate(half, j):
        seq: list[int] = []
        if odd:
            seq.append(j + 2 * half)
        for i, ti in enumerate(t.j, 1):
            ki = 2 * (half + 1 - i) + 2 * ti
            seq += [ki, ki - 1]
        s = DecSeq(tuple(seq))
        out.append((s, s.degree))
    out.sort(key=lambda item: (item[1], item[0].k))
    return out


def complex_dump(m: int, j: int) -> dict:
    c = build_E(m, j)
    return {"m": m, "j": j, "complex": c.to_json_obj(), "homology": homology(c).to_json_obj()}


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)
