from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from linkhom.lp import maximize


def test_textbook_optimum():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), value 36
    res = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.status == "optimal"
    assert res.x == (2, 6) and res.value == 36


def test_infeasible_and_unbounded():
    assert maximize([1], [[1], [-1]], [1, -2]).status == "infeasible"
    assert maximize([1, 0], [[-1, 1]], [0]).status == "unbounded"


def test_phase_one_needed():
    # x + y >= 2 written as -x - y <= -2; min x + y -> value -2
    res = maximize([-1, -1], [[-1, -1], [1, 0], [0, 1]], [-2, 5, 5])
    assert res.status == "optimal" and res.value == -2
    assert sum(res.x) == 2


def test_degenerate_cycling_example():
    # Beale's example cycles under the largest-coefficient rule
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [Fraction(1, 2), -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
    res = maximize(c, A, [0, 0, 1])
    assert res.status == "optimal" and res.value == Fraction(1, 20)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 8), min_size=4, max_size=4),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_solution_is_feasible_and_not_beaten_by_vertices(A, b, c):
    b = b[: len(A)]
    # box keeps the problem bounded
    A = A + [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    b = b + [6, 6, 6]
    res = maximize(c, A, b)
    grid = [(x, y, z) for x in range(7) for y in range(7) for z in range(7)]
    feasible = [p for p in grid if all(sum(r[i] * p[i] for i in range(3)) <= bi for r, bi in zip(A, b))]
    if res.status == "infeasible":
        assert not feasible
        return
    assert res.status == "optimal"
    assert all(v >= 0 for v in res.x)
    assert all(sum(r[i] * res.x[i] for i in range(3)) <= bi for r, bi in zip(A, b))
    assert res.value == sum(ci * xi for ci, xi in zip(c, res.x))
    for p in feasible:
        assert sum(ci * pi for ci, pi in zip(c, p)) <= res.value
