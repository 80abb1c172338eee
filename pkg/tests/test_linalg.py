import random

import pytest

from symprol.linalg import Matrix, Subspace, grassmann_check, rref
from symprol.scalars import GScalar, rat

from conftest import random_rat


def test_rank_identity_and_zero():
    assert Matrix.identity(4).rank() == 4
    assert Matrix.zero(4, 4).rank() == 0


def test_kernel_small_cases():
    assert Matrix.identity(3).kernel().dim == 0
    assert Matrix.zero(2, 3).kernel().dim == 3
    k = Matrix([[rat(2), rat(-1)]]).kernel()
    assert k.basis == [(rat(1), rat(2))]


def test_rank_transpose_and_kernel_random():
    rng = random.Random(101)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Matrix([[random_rat(rng) for _ in range(cols)] for _ in range(rows)])
        assert m.rank() == m.transpose().rank()
        ker = m.kernel()
        assert ker.dim == cols - m.rank()
        for v in ker.basis:
            assert all(not x for x in m.apply(v))


def test_rref_idempotent():
    rng = random.Random(5)
    for _ in range(25):
        rows = [[random_rat(rng) for _ in range(4)] for _ in range(3)]
        red, piv = rref(rows, 4)
        red2, piv2 = rref(red, 4)
        assert red == red2 and piv == piv2


def test_subspace_ops():
    a = Subspace.from_vectors([[rat(1), rat(0), rat(0)]], 3)
    b = Subspace.from_vectors([[rat(0), rat(1), rat(0)]], 3)
    assert a.intersect(b).dim == 0
    assert (a + b).dim == 2
    assert a.intersect(a) == a
    c = Subspace.from_vectors([[rat(1), rat(1), rat(0)]], 3)
    d = Subspace.from_vectors([[rat(1), rat(0), rat(0)], [rat(0), rat(1), rat(0)]], 3)
    assert c.intersect(d).dim == 1


def test_ambient_mismatch_raises():
    a = Subspace.from_vectors([[rat(1), rat(0)]], 2)
    b = Subspace.from_vectors([[rat(1), rat(0), rat(0)]], 3)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a.intersect(b)


def test_grassmann_identity_random():
    rng = random.Random(77)
    for _ in range(30):
        n = rng.randint(2, 6)
        a = Subspace.from_vectors(
            [[random_rat(rng) for _ in range(n)] for _ in range(rng.randint(1, n))], n)
        b = Subspace.from_vectors(
            [[random_rat(rng) for _ in range(n)] for _ in range(rng.randint(1, n))], n)
        assert grassmann_check(a, b)


def test_membership_and_equality_are_canonical():
    u = Subspace.from_vectors([[rat(2), rat(4)], [rat(1), rat(3)]], 2)
    w = Subspace.from_vectors([[rat(1), rat(0)], [rat(0), rat(1)]], 2)
    assert u == w
    assert (rat(5), rat(-1)) in u


def test_complex_entries():
    i = GScalar(0, 1)
    m = Matrix([[i, GScalar(1, 0)], [GScalar(-1, 0), i]])
    assert m.rank() == 1
    ker = m.kernel()
    assert ker.dim == 1
    assert all(not x for x in m.apply(ker.basis[0]))


def test_solve():
    m = Matrix([[rat(1), rat(2)], [rat(3), rat(4)]])
    x = m.solve([rat(5), rat(11)])
    assert m.apply(x) == (rat(5), rat(11))
    inconsistent = Matrix([[rat(1), rat(1)], [rat(2), rat(2)]])
    assert inconsistent.solve([rat(0), rat(1)]) is None
