import json

import pytest

from linkhom.betti import pair_poincare
from linkhom.chains import (
    ChainComplex,
    DecSeq,
    SymbolicMatrix,
    build_E,
    build_relative,
    collapse_pairing,
    complex_dump,
    d_generator_data,
    enum_cells,
    enum_cells_bruteforce,
    homology,
    in_S,
    in_S_i,
    in_Sc,
    rational_basis_generators,
    relative_homology,
    relative_shift,
)
from linkhom.errors import EmptyRange
from linkhom.euler import chi_pair_even
from linkhom.poly import IntPolynomial

SYMB_A = SymbolicMatrix(("00+****", "000+***", "00000**"))
SYMB_B = SymbolicMatrix(("+***", "00+*", "0000"))


def test_shape_predicates():
    assert in_S(SYMB_A) and not in_Sc(SYMB_A)
    assert in_S(SYMB_B)
    assert not in_S(SymbolicMatrix(("0+*", "+**", "000")))
    assert not in_S(SymbolicMatrix(("+0*", "000")))
    assert not in_S(SymbolicMatrix(("+**", "0*0")))


def test_enum_cells_small():
    cells = enum_cells(4, 1)
    assert len(cells) == 2
    assert {c.grid for c in cells} == {("0", "0"), ("+", "0")}
    for d in (4, 5, 6):
        for k in (1, 2, 3):
            assert enum_cells(d, k) == enum_cells_bruteforce(d, k)


def test_cell_dimension():
    A = SymbolicMatrix.from_positions(3, 4, [1, 3])
    assert A.grid == ("+***", "00+*", "000*")
    assert A.cell_dimension() == 4 + 4 + 2 + 1


def test_small_k_cells_all_collapse():
    for d in range(4, 8):
        for k in range(1, d - 2):
            assert all(in_S_i(A, d - 3) for A in enum_cells(d, k))


def test_collapse_pairing():
    pairs = collapse_pairing(5, 3, 1)
    assert len(pairs) == 1
    zero, plus = pairs[0]
    assert zero.nonzero_count() == 0 and plus.grid[0] == "00+"
    for d in range(4, 8):
        for k in range(1, 9):
            matched = []
            for i in range(1, d - 2):
                for a, b in collapse_pairing(d, k, i):
                    assert b.cell_dimension() == a.cell_dimension() + 1
                    matched += [a, b]
            assert len(matched) == len(set(matched))
            assert set(matched) == {A for A in enum_cells(d, k) if in_S_i(A, d - 3)}


def test_remaining_cells_are_E_generators():
    for d in range(4, 8):
        for k in range(d - 2, 9):
            got = set()
            for A in enum_cells(d, k):
                if in_S_i(A, d - 3):
                    continue
                j, seq = d_generator_data(A, d)
                assert A.cell_dimension() == relative_shift(d, k, j) + seq.degree
                got.add((j, seq.label()))
            want = {(s.j, lab) for s in build_relative(d, k) for labs in s.complex.generators.values() for lab in labs}
            assert got == want


def test_build_E_examples():
    e13 = build_E(1, 3)
    assert e13.generators == {0: ["(1)"], 1: ["(2)"], 2: ["(3)"]}
    assert e13.boundary[1] == {(0, 0): 2}
    assert not any(e13.boundary[2].values())
    assert build_E(2, 1).generators == {0: ["(2,1)"]}
    assert build_E(0, 5).generators == {0: ["()"]}


def test_boundary_squared_vanishes_is_checked():
    with pytest.raises(ArithmeticError):
        ChainComplex({0: ["a"], 1: ["b"], 2: ["c"]}, {1: {(0, 0): 1}, 2: {(0, 0): 1}})
    for m in range(6):
        for j in range(1, 9):
            build_E(m, j)


def test_homology_examples():
    assert homology(build_E(1, 3)).groups == {0: (0, (2,)), 2: (1, ())}
    assert homology(build_E(1, 4)).groups == {0: (0, (2,)), 2: (0, (2,))}
    assert homology(ChainComplex({})).is_zero()
    assert homology(build_E(0, 1)).groups == {0: (1, ())}
    for j in (2, 4, 6):
        H = homology(build_E(3, j))
        assert H.rational_poincare().is_zero()


def test_rational_basis():
    assert rational_basis_generators(1, 5) == [(DecSeq((5,)), 4)]
    assert rational_basis_generators(2, 3) == [(DecSeq((2, 1)), 0), (DecSeq((4, 3)), 4)]
    assert rational_basis_generators(3, 2) == []
    degs = [q for _, q in rational_basis_generators(2, 5)]
    assert degs == [0, 4, 8]
    for m in range(6):
        for j in range(1, 9):
            H = homology(build_E(m, j))
            counts = {}
            for _, q in rational_basis_generators(m, j):
                counts[q] = counts.get(q, 0) + 1
            assert {q: r for q, (r, _) in H.groups.items() if r} == counts


def test_relative_complexes():
    summands = build_relative(5, 3)
    assert [(s.j, s.shift) for s in summands] == [(1, 9)]
    assert relative_homology(5, 3).rational_poincare() == IntPolynomial.monomial(9)
    for k in range(2, 8):
        H = relative_homology(4, k)
        assert H.rational_poincare() == IntPolynomial.from_degrees(3 * k - 1 - 2 * (j - 1) for j in range(1, k))
    for d in (5, 6, 7):
        for k in range(d - 2, 9):
            for s in build_relative(d, k):
                top = max(s.complex.generators) + s.shift
                assert top == k * (d - 1) - (d - 2) * (d - 3) // 2 - 2 * (s.j - 1)
    with pytest.raises(EmptyRange):
        build_relative(6, 3)


def test_relative_homology_matches_pair_polynomials_and_euler():
    for d in range(4, 10):
        for k in range(d - 2, 9):
            assert relative_homology(d, k).rational_poincare() == pair_poincare(d, k)
            if d % 2 == 0:
                chi = sum(s.complex.euler_characteristic(s.shift) for s in build_relative(d, k))
                assert chi == chi_pair_even(d, k)


def test_json_dump_is_stable():
    a = json.dumps(complex_dump(2, 3), sort_keys=True)
    b = json.dumps(complex_dump(2, 3), sort_keys=True)
    assert a == b
    obj = json.loads(a)
    assert obj["homology"]["0"] == {"free": 1, "torsion": []}
