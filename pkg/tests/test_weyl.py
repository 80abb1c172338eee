import random

import pytest

from symprol.linalg import Matrix
from symprol.scalars import GScalar, rat
from symprol.weyl import (bracket_constant_term, dim_sym, format_tensor, in_sp,
                          matrix_to_quad, monomial_basis, omega, parse_tensor,
                          poisson_bracket, quad_action, quad_to_matrix,
                          tensor_from_coords)

from conftest import random_tensor


def test_omega_convention(t):
    assert omega(t("p1"), t("q1")) == rat(-1)
    assert omega(t("q1"), t("p1")) == rat(1)
    assert omega(t("p1"), t("p2")) == rat(0)
    assert omega(t("p2"), t("q2")) == rat(-1)


def test_quad_action_printed_cases(t):
    # the basis actions that pin the sign of the identification
    assert quad_action(t("q1*p1"), t("p1")) == t("p1")
    assert quad_action(t("q1*p1"), t("q1")) == t("-1 * q1")
    assert quad_action(t("p1*p2"), t("q1")) == t("-1 * p2")
    assert quad_action(t("p1*p2"), t("q2")) == t("-1 * p1")
    assert quad_action(t("p1*q2"), t("q1")) == t("-1 * q2")
    assert quad_action(t("p1*q2"), t("p2")) == t("p1")
    assert quad_action(t("p1^2"), t("q1")) == t("-2 * p1")
    assert quad_action(t("p1^2"), t("q2")).is_zero()


def test_quad_to_matrix_cases(V, t):
    m = quad_to_matrix(t("q1*p1"))
    diag = [m[i, i] for i in range(4)]
    assert diag == [rat(1), rat(0), rat(-1), rat(0)]
    assert quad_to_matrix(t("p1^2")).rank() == 1
    assert quad_to_matrix(t("p2*q2")).rank() == 2
    assert quad_to_matrix(parse_tensor(V, "0")).is_zero()


def test_matrix_quad_roundtrip_random(V):
    rng = random.Random(9)
    for _ in range(20):
        x = random_tensor(rng, V, 2, terms=4)
        m = quad_to_matrix(x)
        assert in_sp(V, m)
        assert matrix_to_quad(V, m) == x


def test_matrix_to_quad_rejects_non_symplectic(V):
    m = Matrix.identity(4)
    with pytest.raises(ValueError):
        matrix_to_quad(V, m)


def test_sp_membership_characterizes_image(V):
    # the S^2 image is exactly the 10-dimensional kernel of M -> Om M + M^T Om
    om = V.omega_matrix()
    rows = []
    for a in range(4):
        for b in range(4):
            unit = Matrix([[rat(1) if (i, j) == (a, b) else rat(0) for j in range(4)]
                           for i in range(4)])
            c = (om @ unit) + (unit.transpose() @ om)
            rows.append([c[i, j] for i in range(4) for j in range(4)])
    ker = Matrix([[rows[r][c] for r in range(16)] for c in range(16)]).transpose().kernel()
    assert ker.dim == 10


def test_bracket_is_commutator_under_identification(V):
    rng = random.Random(21)
    for _ in range(20):
        a = random_tensor(rng, V, 2, terms=3)
        b = random_tensor(rng, V, 2, terms=3)
        br = poisson_bracket(a, b)
        ma, mb = quad_to_matrix(a), quad_to_matrix(b)
        comm = (ma @ mb) - (mb @ ma)
        assert quad_to_matrix(br) == comm


def test_bracket_reproduces_quad_action(V):
    rng = random.Random(33)
    for _ in range(20):
        a = random_tensor(rng, V, 2, terms=3)
        v = random_tensor(rng, V, 1, terms=2)
        assert poisson_bracket(a, v) == quad_action(a, v)


def test_bracket_examples(t):
    assert poisson_bracket(t("q1*p1"), t("p1^2")) == t("2 * p1^2")
    assert poisson_bracket(t("p1^2"), t("p1^2")).is_zero()
    assert poisson_bracket(t("p1"), t("q1*p1")) == t("-1 * p1")


def test_bracket_antisymmetry_jacobi_grading(V):
    rng = random.Random(57)
    for _ in range(12):
        degs = [rng.randint(1, 4) for _ in range(3)]
        a, b, c = (random_tensor(rng, V, d, terms=2) for d in degs)
        ab = poisson_bracket(a, b)
        assert (ab + poisson_bracket(b, a)).is_zero()
        if not ab.is_zero():
            assert ab.degree == degs[0] + degs[1] - 2
        jac = (poisson_bracket(ab, c)
               + poisson_bracket(poisson_bracket(b, c), a)
               + poisson_bracket(poisson_bracket(c, a), b))
        assert jac.is_zero()


def test_constants_are_dropped(t):
    assert poisson_bracket(t("p1"), t("q1")).is_zero()
    assert bracket_constant_term(t("p1"), t("q1")) == rat(-1)
    assert bracket_constant_term(t("p2"), t("q2")) == rat(-1)


def test_dim_sym():
    assert dim_sym(2, 2) == 10
    assert dim_sym(2, 3) == 20
    assert dim_sym(2, 4) == 35
    assert len(monomial_basis(2, 3)) == 20


def test_text_roundtrip_random(V):
    rng = random.Random(13)
    for k in range(30):
        x = random_tensor(rng, V, rng.randint(1, 4), terms=3, gaussian=(k % 3 == 0))
        txt = format_tensor(x)
        assert parse_tensor(V, txt) == x


def test_parse_user_forms(V, t):
    assert parse_tensor(V, "q1*p1") == t("p1*q1")
    assert parse_tensor(V, "p2*q2 + p1^2 - 2 * q1^2") == \
        t("p1^2") + t("p2*q2") - t("2 * q1^2")
    assert parse_tensor(V, "(1+i) * p1") == t("p1").scale(GScalar(1, 1))
    with pytest.raises(ValueError):
        parse_tensor(V, "3")          # constants are not elements
    with pytest.raises(ValueError):
        parse_tensor(V, "z1^2")       # unknown label


def test_coords_roundtrip(V):
    rng = random.Random(4)
    for _ in range(10):
        x = random_tensor(rng, V, 3, terms=4)
        assert tensor_from_coords(V, 3, x.coords()) == x
