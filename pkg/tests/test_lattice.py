from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from omnitoric import lattice

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_matches_sympy_and_decomposes(a):
    d, u, v = lattice.smith_decomp(a)
    assert lattice.matmul(lattice.matmul(u, a), v) == d
    assert abs(lattice.det(u)) == 1 and abs(lattice.det(v)) == 1
    diag = [d[i][i] for i in range(min(len(a), len(a[0])))]
    assert all(d[i][j] == 0 for i in range(len(a)) for j in range(len(a[0])) if i != j)
    nz = [x for x in diag if x]
    assert all(b % a_ == 0 for a_, b in zip(nz, nz[1:]))
    expected = [int(x) for x in sympy_invariant_factors(Matrix(a), domain=ZZ) if x]
    assert nz == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(a):
    assert lattice.det(a) == Matrix(a).det()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_is_saturated_and_complete(a):
    k = lattice.integer_kernel(a)
    m = len(a[0])
    assert len(k) == m - Matrix(a).rank()
    for row in k:
        assert lattice.matvec(a, row) == [0] * len(a)
    if k:
        assert lattice.is_saturated(k)
        # every rational kernel vector, cleared of denominators, lies in the lattice
        for vec in Matrix(a).nullspace():
            scale = lcm(*(x.q for x in vec))
            w = [int(x * scale) for x in vec]
            assert lattice.same_lattice(k, k + [w])


def test_hermite_is_lattice_invariant():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    # row operations with determinant -1 do not change the lattice
    b = [[a[1][j] + 3 * a[0][j] for j in range(3)], a[0], a[2]]
    assert lattice.hermite_rows(a) == lattice.hermite_rows(b)
    assert not lattice.same_lattice(a, [[2 * x for x in r] for r in a])


def test_inverse_unimodular():
    a = [[2, 1], [1, 1]]
    assert lattice.matmul(a, lattice.inverse_unimodular(a)) == lattice.identity(2)
    with pytest.raises(ValueError):
        lattice.inverse_unimodular([[2, 0], [0, 1]])
