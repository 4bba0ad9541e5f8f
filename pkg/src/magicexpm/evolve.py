"""Evolution operators ``U(t) = exp(-itH)`` for the four-level Hamiltonian.

Conjugating by the magic matrix turns ``H`` into

    R^dag H R = a (x) 1 + 1 (x) b + c3 s3 (x) s2 + c4 s1 (x) s3

with ``a``, ``b`` from :func:`cross_vectors`. The first two terms commute, as
do the last two, so each of the four pieces exponentiates in closed form.
When ``h12 = h34 = 0`` (cross class) the last two vanish and the
product of the first two factors is exact. When ``h13 = h24 = 0``
(checkerboard class) swapping levels 2 and 3 reduces ``H`` to the cross class.
Otherwise the four-factor product is only an approximation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .errors import NotCheckerboardClass, NotCrossClass
from .hamiltonian import Hamiltonian4
from .magic import PAULI_TENSORS, R, R_DAG, S
from .pauli import Su2Vector, exp_su2
from .smallmat import I2, I4, frobenius_distance, tensor

_ZY = PAULI_TENSORS[3][2]
_XZ = PAULI_TENSORS[1][3]


class Method(str, enum.Enum):
    EXACT_CROSS = "exact-cross"
    EXACT_CHECKERBOARD = "exact-checkerboard"
    APPROX = "approx"
    SYMMETRIZED = "symmetrized"
    ORACLE = "oracle"


@dataclass(frozen=True)
class EvolutionReport:
    t: float
    u: np.ndarray
    method: Method
    error_vs_oracle: float


def cross_vectors(h: Hamiltonian4) -> tuple[Su2Vector, Su2Vector]:
    """The ``s (x) 1`` and ``1 (x) s`` parts of ``R^dag H R``."""
    left = Su2Vector((h.h13 - h.h24) / 2, 0.0, (h.h14 + h.h23) / 2)
    right = Su2Vector(0.0, (h.h13 + h.h24) / 2, (h.h14 - h.h23) / 2)
    return left, right


def checkerboard_vectors(h: Hamiltonian4) -> tuple[Su2Vector, Su2Vector]:
    """The ``s (x) 1`` and ``1 (x) s`` parts of ``R^dag S H S R``."""
    left = Su2Vector((h.h12 - h.h34) / 2, 0.0, (h.h14 + h.h23) / 2)
    right = Su2Vector(0.0, (h.h12 + h.h34) / 2, (h.h14 - h.h23) / 2)
    return left, right


def _exp_pauli_string(theta: float, p: np.ndarray) -> np.ndarray:
    # p squares to the identity
    return math.cos(theta) * I4 + 1j * math.sin(theta) * p


def _conj_r(m):
    # keep exp(0) exactly the identity instead of R R^dag up to rounding
    if np.array_equal(m, I4):
        return I4.astype(complex)
    return R @ m @ R_DAG


def factors(h: Hamiltonian4, t: float) -> tuple[np.ndarray, ...]:
    """``(U1, U2, U3, U4)``, each the exact exponential of one piece of ``R^dag H R``."""
    left, right = cross_vectors(h)
    u1 = _conj_r(tensor(exp_su2(-t * left), I2))
    u2 = _conj_r(tensor(I2, exp_su2(-t * right)))
    u3 = _conj_r(_exp_pauli_string(-t * (h.h12 + h.h34) / 2, _ZY))
    u4 = _conj_r(_exp_pauli_string(t * (h.h12 - h.h34) / 2, _XZ))
    return u1, u2, u3, u4


def evolve_oracle(h: Hamiltonian4, t: float) -> np.ndarray:
    return oracle.expm_hermitian(-1, h.matrix(), t)


def exact_cross_factors(h: Hamiltonian4, t: float) -> tuple[np.ndarray, np.ndarray]:
    if not h.is_cross:
        raise NotCrossClass(f"need h12 = h34 = 0, got h12={h.h12!r}, h34={h.h34!r}")
    u1, u2, _, _ = factors(h, t)
    return u1, u2


def evolve_exact_cross(h: Hamiltonian4, t: float) -> np.ndarray:
    u1, u2 = exact_cross_factors(h, t)
    return u1 @ u2


def exact_checkerboard_factors(h: Hamiltonian4, t: float) -> tuple[np.ndarray, np.ndarray]:
    if not h.is_checkerboard:
        raise NotCheckerboardClass(f"need h13 = h24 = 0, got h13={h.h13!r}, h24={h.h24!r}")
    left, right = checkerboard_vectors(h)
    sr = S @ R
    sr_dag = R_DAG @ S
    u1 = sr @ tensor(exp_su2(-t * left), I2) @ sr_dag
    u2 = sr @ tensor(I2, exp_su2(-t * right)) @ sr_dag
    return u1, u2


def evolve_exact_checkerboard(h: Hamiltonian4, t: float) -> np.ndarray:
    u1, u2 = exact_checkerboard_factors(h, t)
    return u1 @ u2


def evolve_approx(h: Hamiltonian4, t: float) -> np.ndarray:
    u1, u2, u3, u4 = factors(h, t)
    return u1 @ u2 @ u3 @ u4


def evolve_symmetrized(h: Hamiltonian4, t: float) -> np.ndarray:
    """Strang-symmetrised product ``U1(t/2) U2(t/2) U3(t) U4(t) U2(t/2) U1(t/2)``.

    Not part of the original factorisation; its error is third order in t
    instead of second.
    """
    u1, u2, _, _ = factors(h, t / 2)
    _, _, u3, u4 = factors(h, t)
    half = u1 @ u2
    return half @ u3 @ u4 @ half


def approx_error(h: Hamiltonian4, t: float) -> float:
    return frobenius_distance(evolve_approx(h, t), evolve_oracle(h, t))


def symmetrized_error(h: Hamiltonian4, t: float) -> float:
    return frobenius_distance(evolve_symmetrized(h, t), evolve_oracle(h, t))


_DISPATCH = {
    Method.EXACT_CROSS: evolve_exact_cross,
    Method.EXACT_CHECKERBOARD: evolve_exact_checkerboard,
    Method.APPROX: evolve_approx,
    Method.SYMMETRIZED: evolve_symmetrized,
    Method.ORACLE: evolve_oracle,
}


def select_method(h: Hamiltonian4) -> Method:
    """Pick the exact method when a class predicate holds, else the approximation."""
    if h.is_checkerboard:
        return Method.EXACT_CHECKERBOARD
    if h.is_cross:
        return Method.EXACT_CROSS
    return Method.APPROX


def evolve(h: Hamiltonian4, t: float, method: Method | str = "auto") -> EvolutionReport:
    if method == "auto":
        method = select_method(h)
    method = Method(method)
    u = _DISPATCH[method](h, t)
    ref = u if method is Method.ORACLE else evolve_oracle(h, t)
    return EvolutionReport(t=t, u=u, method=method, error_vs_oracle=frobenius_distance(u, ref))
