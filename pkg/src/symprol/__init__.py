"""symprol: exact-arithmetic workbench for symplectic Lie algebra theory.

Computes Cartan prolongations of linear subalgebras of sp(4,R) inside the
symmetric algebra of the symplectic 4-space, machine-verifies the
classification of its finite type subalgebras (catalog + prolongation +
rank-one criteria), builds the transitive vector-field algebras over the two
parabolic prolongation models, and carries out the left-symmetric /
connection / curvature calculus on symplectic Lie algebras.

All arithmetic is exact (rationals or Gaussian rationals); there is no
floating point anywhere.
"""

__version__ = "0.1.0"

from .scalars import BACKEND, GScalar, rat
from .weyl import SymplecticSpace, SymTensor, dim_sym, parse_tensor, poisson_bracket
from .prolongation import (LinearSubalgebra, finite_type_verdict, prolong_chain,
                           rank_one_witness)
