"""Vector-field realizations: semi-direct models of the two parabolic
prolongations, the transitive algebra constructions over primitive plane
bases, triangle modules, order filtrations, and degree-one Chevalley-
Eilenberg cohomology."""

from .series import PlaneVF, TruncSeries, poly1, poly2
from .plane import (PRIMITIVE_SYMPLECTIC, conf_fields, euc_alpha_fields,
                    gl2aff_fields, hyperbolic_fields, order_filtration_plane,
                    sl2aff_fields, sphere_fields, euclid_fields)
from .p2model import P2Element, build_thmK1, p2_bracket, ModelReport
from .p1model import (InvarianceError, K2Element, build_thmK2, k2_bracket,
                      node_eigen_checks, triangle_nodes, triangle_real_basis)
from .cohomology import (H1Result, NonsplitReport, bracket_action_matrices,
                         ce_h1, nonsplit_check)
