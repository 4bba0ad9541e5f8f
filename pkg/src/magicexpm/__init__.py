"""Exponentials of four-level-system Hamiltonians via the magic matrix.

The magic matrix ``R`` conjugates ``SU(2) (x) SU(2)`` onto ``SO(4)``. Applied
to the real symmetric Hamiltonians of a four-level atom it splits ``exp(-itH)``
into SU(2) factors: exactly for the cross and checkerboard classes, and
approximately otherwise. The same splitting gives a closed-form
Baker-Campbell-Hausdorff composition for the checkerboard class.
"""

from .bch import (
    BchCoefficients,
    BchResult,
    CheckerboardSym,
    bch_series,
    su2_bch,
    su2_bch_coeffs,
    su4_bch,
)
from .errors import (
    BranchCut,
    MagicExpmError,
    NonSpecialUnitaryInput,
    NotCheckerboardClass,
    NotCrossClass,
    NotHermitian,
    NotSymmetricTraceless,
    NotUnitary,
    OutOfDomain,
    UnsupportedOrder,
)
from .evolve import (
    EvolutionReport,
    Method,
    approx_error,
    evolve,
    evolve_approx,
    evolve_exact_checkerboard,
    evolve_exact_cross,
    evolve_oracle,
    evolve_symmetrized,
)
from .hamiltonian import Hamiltonian4
from .magic import (
    So4Element,
    TensorDecomposition,
    algebra_map,
    conjugate_hamiltonian,
    conjugate_traceless_symmetric,
    group_map,
    hodge_star,
    inverse_algebra_map,
    magic_matrix,
    swap_matrix,
)
from .pauli import Su2Vector, cross, dot, exp_su2, to_matrix

__version__ = "0.1.0"
