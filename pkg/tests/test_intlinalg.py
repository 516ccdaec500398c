import random
from fractions import Fraction

import numpy as np
import pytest

from torusdual import intlinalg as il


def check_decomposition(m, snf):
    assert np.array_equal(snf.u @ m @ snf.v, snf.d)
    assert abs(il.det(snf.u)) == 1
    assert abs(il.det(snf.v)) == 1
    diag = snf.diagonal
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x != 0]
    # nonzero entries first, then the divisibility chain
    assert diag[: len(nonzero)] == tuple(nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


def test_snf_identity():
    m = il.identity(3)
    snf = il.smith_normal_form(m)
    assert np.array_equal(snf.d, m)
    check_decomposition(m, snf)


def test_snf_zero():
    m = il.zeros(2, 2)
    snf = il.smith_normal_form(m)
    assert np.array_equal(snf.d, m)
    check_decomposition(m, snf)


def test_snf_diag_2_3():
    m = il.intmat([[2, 0], [0, 3]])
    snf = il.smith_normal_form(m)
    assert snf.diagonal == (1, 6)
    check_decomposition(m, snf)


def test_snf_random_matrices():
    rng = random.Random(20240901)
    for trial in range(500):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = il.intmat(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        snf = il.smith_normal_form(m)
        check_decomposition(m, snf)


def test_snf_diagonal_matches_sympy():
    # independent oracle for the invariant factors
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    rng = random.Random(77)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        entries = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        snf = il.smith_normal_form(il.intmat(entries))
        ours = [x for x in snf.diagonal if x != 0]
        theirs = [int(f) for f in invariant_factors(Matrix(entries), domain=ZZ) if f != 0]
        assert ours == [abs(t) for t in theirs]


def test_kernel_zero_matrix():
    basis = il.kernel_basis(il.zeros(2, 2))
    assert sorted(tuple(v) for v in basis) == [(0, 1), (1, 0)]


def test_kernel_identity():
    assert il.kernel_basis(il.identity(3)) == []


def test_kernel_coordinate_swap():
    m = il.intmat([[-1, 1], [1, -1]])  # swap minus identity
    basis = il.kernel_basis(m)
    assert len(basis) == 1
    v = tuple(basis[0])
    assert v in ((1, 1), (-1, -1))


def test_kernel_rank_nullity():
    rng = random.Random(5)
    for _ in range(100):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = il.intmat([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        basis = il.kernel_basis(m)
        assert len(basis) == cols - il.rank(m)
        for v in basis:
            assert all(x == 0 for x in m @ v)


def test_cokernel_identity():
    free, tor = il.cokernel(il.identity(4))
    assert free == 0 and tor.is_trivial


def test_cokernel_index_two():
    free, tor = il.cokernel(il.intmat([[2]]))
    assert free == 0
    assert tor.invariant_factors == (2,)


def test_cokernel_su3_inside_psu3():
    # cocharacter inclusion of the rank-2 simply connected form into the
    # adjoint one: columns are the simple coroots in coweight coordinates
    from torusdual.rootdata import build_simple, connection_index

    psu3 = build_simple("A", 2, "adjoint")
    iota = psu3.coroot_matrix()
    free, tor = il.cokernel(iota)
    assert free == 0
    assert tor.invariant_factors == (3,)
    assert connection_index(psu3) == 3


def test_cokernel_torsion_order_is_abs_det():
    rng = random.Random(11)
    done = 0
    while done < 80:
        n = rng.randint(1, 4)
        m = il.intmat([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        d = il.det(m)
        if d == 0:
            continue
        free, tor = il.cokernel(m)
        assert free == 0
        assert tor.order == abs(d)
        done += 1


def test_solve_mod_lattice_inversion_on_circle():
    reps = il.solve_mod_lattice(il.intmat([[-2]]))
    assert reps == [(Fraction(0),), (Fraction(1, 2),)]


def test_solve_mod_lattice_zero_matrix():
    reps = il.solve_mod_lattice(il.zeros(2, 2))
    assert reps == [(Fraction(0), Fraction(0))]


def test_solve_mod_lattice_su3_stacked():
    from torusdual.rootdata import build_simple
    from torusdual.weyl import simple_reflection_matrices

    su3 = build_simple("A", 2, "sc")
    stacked = []
    for s in simple_reflection_matrices(su3):
        for i in range(2):
            stacked.append([s[i][j] - int(i == j) for j in range(2)])
    reps = il.solve_mod_lattice(il.intmat(stacked), modulo_kernel=False)
    assert len(reps) == 3


def test_solve_mod_lattice_counts_coker_torsion():
    rng = random.Random(23)
    done = 0
    while done < 50:
        n = rng.randint(1, 3)
        m = il.intmat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        reps = il.solve_mod_lattice(m)
        _, tor = il.cokernel(m)
        assert len(reps) == tor.order
        arr = np.asarray(m, dtype=object)
        for rep in reps:
            image = arr @ np.array([Fraction(x) for x in rep], dtype=object)
            assert all(Fraction(v).denominator == 1 for v in image)
        done += 1


def test_solve_mod_lattice_sublattice_target():
    # x in 2Z: solutions sit inside Z, single coset on the circle
    reps = il.solve_mod_lattice(il.identity(1), target=il.intmat([[2]]))
    assert reps == [(Fraction(0),)]
    # 2x in 3Z <=> x in (3/2)Z: two points on the circle
    reps = il.solve_mod_lattice(il.intmat([[2]]), target=il.intmat([[3]]))
    assert reps == [(Fraction(0),), (Fraction(1, 2),)]


def test_solve_mod_lattice_infinite_transverse():
    with pytest.raises(il.InfiniteSolutionSetError):
        il.solve_mod_lattice(il.zeros(2, 2), modulo_kernel=False)


def test_rational_inverse_and_det():
    m = il.intmat([[2, 1], [1, 1]])
    inv = il.rational_inverse(m)
    assert np.array_equal(m @ inv, il.identity(2))
    assert il.det(m) == 1
    assert il.det(il.intmat([[2, 0], [0, 3]])) == 6
    with pytest.raises(ValueError):
        il.rational_inverse(il.zeros(2, 2))


def test_restrict_to_sublattice():
    # swap on Z^2 restricted to the fixed line span{(1,1)}
    swap = il.intmat([[0, 1], [1, 0]])
    basis = il.intmat([[1], [1]])
    r = il.restrict_to_sublattice(swap, basis)
    assert r.shape == (1, 1) and r[0, 0] == 1
    with pytest.raises(ValueError):
        il.restrict_to_sublattice(il.intmat([[1, 0], [0, 2]]), il.intmat([[1], [1]]))
