"""Finite-dimensional transitive Lie algebras of vector fields on the plane.

The four primitive algebras of symplectic (area-preserving, for a suitable
area form) vector fields:

  * hyperbolic  -- sl2(R) by Moebius fields on the upper half plane,
                   translated so the origin is a regular point;
  * sphere      -- so3(R), infinitesimal rotations of the round 2-sphere in
                   stereographic coordinates;
  * sl2aff      -- unimodular affine algebra sl2(R) + R^2;
  * euclid      -- Euclidean motions R + R^2.

sl2aff and euclid preserve the standard area form dx^dy (divergence zero);
hyperbolic preserves dx^dy / (1+y)^2 and the sphere 4 dx^dy / (1+x^2+y^2)^2,
which the tests verify as truncated series identities.

Also here: the larger (non-symplectic) primitive plane algebras used as
bases of the semi-direct constructions on the Lagrangian side -- affine,
special affine, conformal, and the one-parameter twisted Euclidean family --
and the order filtration of a plane vector-field algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..scalars import ZERO, ONE, rat
from ..linalg import Matrix, Subspace
from ..structure import LieTable, tabulate
from .series import DEFAULT_TRUNC, PlaneVF


def _vf(fx, fy, trunc=DEFAULT_TRUNC):
    return PlaneVF.make(fx, fy, trunc)


def hyperbolic_fields(trunc=DEFAULT_TRUNC):
    """Moebius sl2(R): d/dx, x d/dx + (y+1) d/dy,
    (x^2-(y+1)^2) d/dx + 2x(y+1) d/dy."""
    A = _vf({(0, 0): 1}, {}, trunc)
    B = _vf({(1, 0): 1}, {(0, 1): 1, (0, 0): 1}, trunc)
    C = _vf({(2, 0): 1, (0, 2): -1, (0, 1): -2, (0, 0): -1},
            {(1, 1): 2, (1, 0): 2}, trunc)
    return [A, B, C]


def sphere_fields(trunc=DEFAULT_TRUNC):
    """so3(R): -y d/dx + x d/dy, (1+x^2-y^2) d/dx + 2xy d/dy,
    2xy d/dx + (1-x^2+y^2) d/dy."""
    J = _vf({(0, 1): -1}, {(1, 0): 1}, trunc)
    B = _vf({(0, 0): 1, (2, 0): 1, (0, 2): -1}, {(1, 1): 2}, trunc)
    C = _vf({(1, 1): 2}, {(0, 0): 1, (2, 0): -1, (0, 2): 1}, trunc)
    return [J, B, C]


def sl2aff_fields(trunc=DEFAULT_TRUNC):
    """sl2(R) + R^2: translations and the traceless linear fields."""
    return [_vf({(0, 0): 1}, {}, trunc), _vf({}, {(0, 0): 1}, trunc),
            _vf({(1, 0): 1}, {(0, 1): -1}, trunc),
            _vf({(0, 1): 1}, {}, trunc), _vf({}, {(1, 0): 1}, trunc)]


def euclid_fields(trunc=DEFAULT_TRUNC):
    """R + R^2: translations and the rotation."""
    return [_vf({(0, 0): 1}, {}, trunc), _vf({}, {(0, 0): 1}, trunc),
            _vf({(0, 1): -1}, {(1, 0): 1}, trunc)]


def gl2aff_fields(trunc=DEFAULT_TRUNC):
    """gl2(R) + R^2, the full affine algebra."""
    return [_vf({(0, 0): 1}, {}, trunc), _vf({}, {(0, 0): 1}, trunc),
            _vf({(1, 0): 1}, {}, trunc), _vf({(0, 1): 1}, {}, trunc),
            _vf({}, {(1, 0): 1}, trunc), _vf({}, {(0, 1): 1}, trunc)]


def euler_field(trunc=DEFAULT_TRUNC) -> PlaneVF:
    """E = x d/dx + y d/dy."""
    return _vf({(1, 0): 1}, {(0, 1): 1}, trunc)


def rotation_field(trunc=DEFAULT_TRUNC) -> PlaneVF:
    """J = x d/dy - y d/dx."""
    return _vf({(0, 1): -1}, {(1, 0): 1}, trunc)


def conf_fields(trunc=DEFAULT_TRUNC):
    """conf(R^2) = span(d/dx, d/dy, E, J)."""
    return [_vf({(0, 0): 1}, {}, trunc), _vf({}, {(0, 0): 1}, trunc),
            euler_field(trunc), rotation_field(trunc)]


def euc_alpha_fields(alpha, trunc=DEFAULT_TRUNC):
    """euc_alpha(R^2) = span(d/dx, d/dy, alpha E - J), alpha >= 0."""
    a = rat(alpha) if isinstance(alpha, int) else alpha
    if a < 0:
        raise ValueError("alpha must be >= 0")
    Ja = euler_field(trunc).scale(a) - rotation_field(trunc)
    return [_vf({(0, 0): 1}, {}, trunc), _vf({}, {(0, 0): 1}, trunc), Ja]


PRIMITIVE_SYMPLECTIC = {
    "hyperbolic": hyperbolic_fields,
    "sphere": sphere_fields,
    "sl2aff": sl2aff_fields,
    "euclid": euclid_fields,
}


@dataclass
class PlaneFiltration:
    """Order filtration of a plane vector-field algebra."""

    table: LieTable
    fields: list
    transitive: bool
    stability: Subspace          # coefficient vectors vanishing at the origin
    isotropy_dim: int
    isotropy_kernel_dim: int
    filtration_dims: list

    def isotropy_matrices(self):
        """Linear action of a stability basis on the tangent space."""
        out = []
        for v in self.stability.basis:
            m = None
            for c, f in zip(v, self.fields):
                if c:
                    part = f.linear_part().scale(c)
                    m = part if m is None else m + part
            out.append(m if m is not None else Matrix.zero(2, 2))
        return out


def plane_table(fields, labels=None) -> LieTable:
    return tabulate(fields, lambda a, b: a.bracket(b), lambda v: v.to_dict(), labels)


def order_filtration_plane(fields, labels=None) -> PlaneFiltration:
    """Filtration by vanishing order at the origin, transitivity and the
    linear isotropy of span(fields)."""
    table = plane_table(fields, labels)
    n = len(fields)
    ev = Matrix([[fields[c].value_at_origin()[r] for c in range(n)] for r in range(2)],
                ncols=n)
    transitive = ev.rank() == 2
    stability = ev.kernel()
    maxdeg = max((f.degree() for f in fields), default=0)
    dims = []
    rows = []
    for d in range(maxdeg + 1):
        # g_d = fields whose coefficients vanish to order > d at the origin
        parts = [fields[c].homogeneous_part(d).to_dict() for c in range(n)]
        keys = sorted({k for p in parts for k in p})
        rows.extend([[parts[c].get(k, ZERO) for c in range(n)] for k in keys])
        cur = Matrix(rows, ncols=n).kernel() if rows else Subspace.full(n)
        dims.append(cur.dim)
        if cur.dim == 0:
            break
    iso_kernel = _isotropy_kernel(table, stability)
    return PlaneFiltration(table, list(fields), transitive, stability,
                           stability.dim - iso_kernel.dim, iso_kernel.dim, dims)


def _isotropy_kernel(table: LieTable, stability: Subspace) -> Subspace:
    """{x in stability : [x, g] is contained in stability}, the kernel of the
    isotropy representation on g / stability."""
    n = table.n
    cond = stability.quotient_conditions()
    if not cond:
        return stability
    C = Matrix(cond)
    rows = []
    for j in range(n):
        e = [ZERO] * n
        e[j] = ONE
        # map x -> C [x, e_j], linear in x
        cols = []
        for i in range(n):
            xi = [ZERO] * n
            xi[i] = ONE
            cols.append(C.apply(table.bracket_coords(xi, e)))
        rows.extend([[cols[i][r] for i in range(n)] for r in range(len(cond))])
    sol = Matrix(rows, ncols=n).kernel()
    return sol.intersect(stability)


isotropy_kernel = _isotropy_kernel
