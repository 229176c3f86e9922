"""Exact rational simplex method (dictionary form, Bland's rule).

Solves ``max c.x  s.t.  A x <= b, x >= 0`` over the rationals. A phase-one
auxiliary problem is used when some ``b_i < 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] = ()
    value: Fraction | None = None


class _Dictionary:
    # basic_i = rhs_i + sum_j coef[i][j] * nonbasic_j ; objective likewise.

    def __init__(self, A, b, c):
        m, n = len(A), len(c)
        self.m, self.n = m, n
        self.nonbasic = list(range(n))
        self.basic = list(range(n, n + m))
        self.rhs = [Fraction(v) for v in b]
        self.coef = [[Fraction(-v) for v in row] for row in A]
        self.obj_const = Fraction(0)
        self.obj = [Fraction(v) for v in c]

    def pivot(self, r: int, s: int) -> None:
        row = self.coef[r]
        a = row[s]
        leaving = self.basic[r]
        entering = self.nonbasic[s]
        # solve row r for the entering variable
        inv = -1 / a
        new_row = [v * inv for v in row]
        new_row[s] = 1 / a
        new_rhs = self.rhs[r] * inv
        self.coef[r] = new_row
        self.rhs[r] = new_rhs
        for i in range(self.m):
            if i == r:
                continue
            f = self.coef[i][s]
            if f == 0:
                continue
            ri = self.coef[i]
            for j in range(self.n):
                if j == s:
                    ri[j] = f * new_row[j]
                elif new_row[j]:
                    ri[j] += f * new_row[j]
            self.rhs[i] += f * new_rhs
        f = self.obj[s]
        if f:
            for j in range(self.n):
                if j == s:
                    self.obj[j] = f * new_row[j]
                elif new_row[j]:
                    self.obj[j] += f * new_row[j]
            self.obj_const += f * new_rhs
        self.basic[r] = entering
        self.nonbasic[s] = leaving

    def optimize(self, max_iter: int = 100000) -> str:
        for _ in range(max_iter):
            # Bland: entering = smallest variable index with positive cost
            cand = [(self.nonbasic[j], j) for j in range(self.n) if self.obj[j] > 0]
            if not cand:
                return "optimal"
            _, s = min(cand)
            best = None
            for i in range(self.m):
                a = self.coef[i][s]
                if a < 0:
                    ratio = self.rhs[i] / -a
                    key = (ratio, self.basic[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], s)
        raise RuntimeError("simplex iteration limit exceeded")

    def values(self, nvars: int) -> list[Fraction]:
        x = [Fraction(0)] * nvars
        for i, v in enumerate(self.basic):
            if v < nvars:
                x[v] = self.rhs[i]
        return x


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Maximize ``c.x`` subject to ``A x <= b`` and ``x >= 0``, exactly."""
    m, n = len(A), len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if m and min(b) < 0:
        # phase one: max -x0  s.t.  A x - x0 <= b
        aux = _Dictionary([list(row) + [-1] for row in A], b, [0] * n + [-1])
        # variable n is x0; first pivot makes the dictionary feasible
        r = min(range(m), key=lambda i: (aux.rhs[i], aux.basic[i]))
        aux.pivot(r, n)
        aux.optimize()
        if aux.obj_const < 0:
            return LPResult("infeasible")
        # drive x0 out of the basis if it is still there (at value 0)
        if n in aux.basic:
            r = aux.basic.index(n)
            s = next(j for j in range(aux.n) if aux.coef[r][j] != 0)
            aux.pivot(r, s)
        s0 = aux.nonbasic.index(n)
        for row in aux.coef:
            del row[s0]
        del aux.nonbasic[s0]
        aux.n -= 1
        # rebuild objective in terms of the current nonbasic variables
        obj = [Fraction(0)] * aux.n
        const = Fraction(0)
        cf = [Fraction(v) for v in c]
        for j, v in enumerate(aux.nonbasic):
            if v < n:
                obj[j] += cf[v]
        for i, v in enumerate(aux.basic):
            if v < n and cf[v]:
                const += cf[v] * aux.rhs[i]
                for j in range(aux.n):
                    obj[j] += cf[v] * aux.coef[i][j]
        aux.obj, aux.obj_const = obj, const
        d = aux
    else:
        d = _Dictionary(A, b, c)
    status = d.optimize()
    if status == "unbounded":
        return LPResult("unbounded")
    return LPResult("optimal", tuple(d.values(n)), d.obj_const)
