"""Acceptance suite.

One test per acceptance criterion; each prints a single PASS/FAIL line
(visible with pytest -s or in the captured output).  Every check is exact:
all arithmetic is rational or Gaussian-rational, so there are no tolerances
anywhere.  Run with

    pytest tests/test_acceptance.py -v -s
"""

import contextlib

from symprol import catalog as C
from symprol import fedosov as F
from symprol.prolongation import (FINITE, INFINITE, LinearSubalgebra,
                                  finite_type_verdict,
                                  parabolic_prolong_closed_form, prolong_chain)
from symprol.realizations import (bracket_action_matrices, build_thmK1,
                                  build_thmK2, ce_h1)
from symprol.scalars import rat
from symprol.structure import tabulate
from symprol.weyl import (SymTensor, SymplecticSpace, monomial_basis,
                          poisson_bracket, quad_to_matrix)


@contextlib.contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} ({title}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({title}): PASS")


def test_criterion_1_main_finite_type_list():
    with criterion(1, "maximal finite type subalgebras: closed, dim <= 4, h1 = 0"):
        names = ["s2", "s3", "glP", "s5", "k-mixed", "D4_12", "eline"]
        for name in names:
            entry = C.get(name)
            for params in entry.param_sets():
                h = entry.instantiate(params)
                assert h.check_closure() is None, (name, params)
                assert h.dim <= 4, (name, params)
                chain = prolong_chain(h, kmax=1)
                assert chain.dims[1] == 0, (name, params)


def test_criterion_2_maximal_subalgebra_types():
    with criterion(2, "types of the maximal subalgebras"):
        for name in ("p1", "p2", "s1", "s4"):
            v = finite_type_verdict(C.get(name).instantiate())
            assert v.kind == INFINITE, name
        for name in ("s2", "s3", "s5"):
            v = finite_type_verdict(C.get(name).instantiate())
            assert v.kind == FINITE and v.h1_dim == 0, name


def test_criterion_3_prolongation_dimensions(V):
    with criterion(3, "prolongation dimensions and closed forms"):
        sp = LinearSubalgebra(V, [SymTensor(V, {m: rat(1)})
                                  for m in monomial_basis(2, 2)], "sp")
        assert prolong_chain(sp, kmax=2).dims == [10, 20, 35]
        chains = {}
        for name in ("p1", "p2"):
            chains[name] = prolong_chain(C.get(name).instantiate(), kmax=1)
        assert chains["p1"].dims[1] == 10
        assert chains["p2"].dims[1] == 11
        for name in ("p1", "p2"):
            assert parabolic_prolong_closed_form(V, name, 1) == chains[name].levels[1]
        assert prolong_chain(C.get("s1").instantiate(), kmax=1).dims[1] == 8


def test_criterion_4_tables_suite():
    with criterion(4, "classification tables: Goursat roundtrip + table rows"):
        for label, q in C.table_quintuples():
            h = C.goursat_subalgebra(q)
            q2 = C.goursat_quintuple(h)
            assert C.quintuples_equal(q, q2), label
        table2 = ["F6_5", "F6_6", "F3_5", "F5_3", "DF6_5", "DF6_6", "DF3_5",
                  "DF5_3", "Ft3_9", "Ft4_7", "Ft5_6", "D4_12p", "D4_13",
                  "D6_13", "D6_14", "D6_15", "D6_22"]
        for name in table2:
            entry = C.get(name)
            for params in entry.param_sets():
                h = entry.instantiate(params)
                assert h.check_closure() is None, (name, params)
                assert prolong_chain(h, kmax=1).dims[1] == 0, (name, params)
        finite_items = ["p2c-iii", "p2c-iv", "p2c-vii", "p2c-viii", "p2c-ix", "p2c-x"]
        for name in finite_items:
            entry = C.get(name)
            for params in entry.param_sets():
                v = finite_type_verdict(entry.instantiate(params))
                assert v.kind == FINITE and v.h1_dim == 0, (name, params)
        for name in ("p2c-i", "p2c-ii", "p2c-vi"):
            entry = C.get(name)
            for params in entry.param_sets():
                v = finite_type_verdict(entry.instantiate(params))
                assert v.kind == INFINITE, (name, params)


def test_criterion_5_ce_cohomology(V, t):
    with criterion(5, "degree-one cohomology values and generators"):
        def h1(h_txt, m_txt):
            h = [t(s) for s in h_txt]
            m = [t(s) for s in m_txt]
            table = tabulate(h, poisson_bracket, lambda x: dict(x.coeffs))
            return ce_h1(table, bracket_action_matrices(h, m))

        res = h1(["p2^2", "p2*q2"], ["p1^2"])
        assert res.dim == 1
        rep = res.representatives[0]
        assert rep[0] == (rat(0),) and rep[1][0]    # c(p2^2) = 0, c(p2q2) ~ p1^2

        res = h1(["p2^2"], ["p1*p2", "p1*q2"])
        assert res.dim == 1
        assert res.representatives[0][0][1]         # c(p2^2) has a p1q2 part

        for h_txt in (["p2*q2"], ["p2^2 + q2^2"], ["p2^2", "p2*q2"],
                      ["p2^2", "p2*q2", "q2^2"]):
            assert h1(h_txt, ["p1*p2", "p1*q2"]).dim == 0


def test_criterion_6_transitive_constructions():
    with criterion(6, "transitive algebra constructions: Jacobi, dims, isotropy"):
        for base in ("hyperbolic", "sphere", "sl2aff", "euclid"):
            for k in (1, 2, 3):
                Ns = (0,) if base in ("hyperbolic", "sphere") else \
                    tuple(N for N in (0, 1) if 2 * N <= k)
                for N in Ns:
                    rep = build_thmK1(base, k, N)
                    assert rep.jacobi_ok, rep.name
                    assert rep.transitive, rep.name
                    assert rep.dim == rep.expected_dim, rep.name
                    assert rep.stability_dim == rep.expected_stability_dim, rep.name
                    assert rep.isotropy_dim == rep.expected_isotropy_dim, rep.name
                    assert (rep.isotropy_kernel_dim > 0) == (k > 2), rep.name
        for base in ("sl2aff2", "gl2aff2"):
            for k in (1, 2, 3):
                rep = build_thmK2(base, k=k)
                assert rep.ok, rep.name
                assert (rep.isotropy_kernel_dim > 0) == (k > 2), rep.name
        for tops in ([(1, 1), (1, -1)], [(2, 0)], [(3, 3), (3, -3)]):
            rep = build_thmK2("conf", tops=tops)
            assert rep.ok, rep.name
            rep = build_thmK2("euc", tops=tops, alpha=1)
            assert rep.ok, rep.name


def test_criterion_7_symplectic_lie_algebra_suite():
    with criterion(7, "symplectic Lie algebra calculus on the corpus"):
        algs = F.corpus()
        assert len(algs) >= 8
        assert len(F.NILPOTENT_CORPUS) >= 5
        for g in algs.values():
            rep = F.fedosov_report(g)
            assert rep.ok, g.name
        for name in F.NILPOTENT_CORPUS:
            rep = F.fedosov_report(algs[name])
            assert rep.ricci.is_zero(), name
            assert rep.structure.kappa.is_zero(), name
        aff = algs["aff1"]
        p = F.lsa_from_symplectic(aff)
        assert F.ricci_closed(p)[0, 0] == rat(2, 9)
        assert F.ricci_trace_of_curvature(F.connection(p))[0, 0] == rat(2, 9)


def test_criterion_8_nomizu_uniqueness():
    with criterion(8, "invariant connection uniqueness via Nomizu systems"):
        h_act, mbm, h_table, om = F.cp2_symmetric_data()
        res = F.nomizu_solutions(h_act, mbm, h_table, equivariant=True)
        assert res.solution_dim == 0 and res.unique
        V = SymplecticSpace(2)
        mats = [quad_to_matrix(SymTensor(V, {m: rat(1)}))
                for m in monomial_basis(2, 2)]
        res2 = F.nomizu_solutions(mats, {}, None, equivariant=False)
        assert res2.homogeneous_dim == 20
