"""Smith normal form invariant factors over the integers."""

from __future__ import annotations

import math
from typing import Sequence


def _fix_divisibility(diag: list[int]) -> list[int]:
    d = sorted(abs(x) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return d


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries ``d_1 | d_2 | ...`` of the Smith normal form.

    The length of the result is the rank. Elimination pivots on the entry of
    smallest magnitude; the final diagonal is normalized by gcd/lcm swaps.
    """
    a = [list(map(int, row)) for row in matrix]
    if not a or not a[0]:
        return []
    nr, nc = len(a), len(a[0])
    diag: list[int] = []
    t = 0
    while t < nr and t < nc:
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, nc):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, nc):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for i in range(t, nr):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            # move the smallest remaining entry of row/column t into the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, pi, pj = min(cand)
            a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(a[t][t])
        t += 1
    return _fix_divisibility(diag)
