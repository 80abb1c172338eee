import pytest

from symprol.scalars import rat
from symprol.structure import ClosureError, LieTable, tabulate
from symprol.weyl import poisson_bracket


def test_tabulate_and_jacobi(V, t):
    gens = [t("p2^2"), t("p2*q2"), t("q2^2")]
    table = tabulate(gens, poisson_bracket, lambda x: dict(x.coeffs), ["e", "h", "f"])
    assert table.jacobi_violation() is None
    # [p2^2, p2q2] = -2 p2^2
    assert table.brackets[(0, 1)] == {0: rat(-2)}
    ad = table.ad_matrix((rat(0), rat(1), rat(0)))     # ad of the Cartan element
    assert ad[0, 0] == rat(2) and ad[2, 2] == rat(-2)


def test_tabulate_closure_error(V, t):
    with pytest.raises(ClosureError) as exc:
        tabulate([t("p1^2"), t("q1^2")], poisson_bracket, lambda x: dict(x.coeffs))
    assert exc.value.pair == ("x1", "x2")


def test_tabulate_rejects_dependent_elements(V, t):
    with pytest.raises(ValueError):
        tabulate([t("p1^2"), t("2 * p1^2")], poisson_bracket, lambda x: dict(x.coeffs))


def test_series_computations():
    # heisenberg: [e1,e2] = e3
    table = LieTable(["e1", "e2", "e3"], {(0, 1): {2: rat(1)}})
    assert [s.dim for s in table.lower_central_series()] == [3, 1, 0]
    assert [s.dim for s in table.derived_series()] == [3, 1, 0]
    assert table.is_nilpotent() and table.is_solvable()
    # aff(R): solvable, not nilpotent
    aff = LieTable(["e1", "e2"], {(0, 1): {1: rat(1)}})
    assert aff.is_solvable() and not aff.is_nilpotent()
    # sl2: neither
    sl2 = LieTable(["e", "h", "f"],
                   {(0, 1): {0: rat(-2)}, (0, 2): {1: rat(1)}, (1, 2): {2: rat(-2)}})
    assert not sl2.is_solvable() and not sl2.is_nilpotent()
    assert sl2.jacobi_violation() is None


def test_jacobi_violation_detected():
    bad = LieTable(["a", "b", "c"],
                   {(0, 1): {2: rat(1)}, (0, 2): {0: rat(1)}, (1, 2): {1: rat(1)}})
    assert bad.jacobi_violation() is not None
