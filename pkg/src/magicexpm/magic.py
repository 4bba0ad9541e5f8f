"""The magic matrix R and the SU(2) x SU(2) <-> SO(4) correspondence.

Conjugation by ``R`` (``M -> R^dag M R``) maps ``SU(2) (x) SU(2)`` onto the
real rotations ``SO(4)``, and at the algebra level maps
``i(a (x) 1 + 1 (x) b)`` onto a real antisymmetric matrix whose self-dual
and anti-self-dual halves are ``a`` and ``b``.

The same conjugation, applied to the real symmetric Hamiltonians of the
four-level system, produces a short sum of Pauli tensor products; see
:func:`conjugate_hamiltonian`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonSpecialUnitaryInput, NotSymmetricTraceless
from .hamiltonian import Hamiltonian4
from .pauli import SIGMA, Su2Vector, to_matrix
from .smallmat import I2, dagger, frozen, tensor

_r = 1 / math.sqrt(2)

R = frozen(
    _r
    * np.array(
        [
            [1, 0, 0, -1j],
            [0, -1j, -1, 0],
            [0, -1j, 1, 0],
            [1, 0, 0, 1j],
        ]
    )
)
R_DAG = frozen(dagger(R))


def _bell_columns() -> np.ndarray:
    e = np.eye(4)
    ket00, ket01, ket10, ket11 = e
    psi1 = _r * (ket00 + ket11)
    psi2 = _r * (ket01 + ket10)
    psi3 = _r * (ket01 - ket10)
    psi4 = _r * (ket00 - ket11)
    return np.column_stack([psi1, -1j * psi2, -psi3, -1j * psi4])


# Phase conventions are where sign errors hide; keep the explicit entries
# honest against the Bell-state definition of the columns.
assert np.allclose(R, _bell_columns(), atol=1e-15, rtol=0)

S = frozen(0.5 * sum(tensor(s, s) for s in SIGMA))
assert np.array_equal(S, np.eye(4)[[0, 2, 1, 3]])

# Pauli-string labels for the tensor basis, s_i (x) s_j -> "IX", "ZY", ...
PAULI_LABELS = "IXYZ"
PAULI_TENSORS = tuple(
    tuple(frozen(tensor(SIGMA[i], SIGMA[j])) for j in range(4)) for i in range(4)
)


def magic_matrix() -> np.ndarray:
    return R.copy()


def swap_matrix() -> np.ndarray:
    return S.copy()


def _is_su2(u, tol) -> bool:
    u = np.asarray(u)
    if u.shape != (2, 2):
        return False
    defect = np.linalg.norm(dagger(u) @ u - I2)
    return defect <= tol and abs(np.linalg.det(u) - 1) <= tol


def group_map(a, b, tol: float = 1e-10) -> np.ndarray:
    """``R^dag (a (x) b) R`` for ``a, b`` in SU(2); the result lies in SO(4).

    The complex array is returned as computed, so that callers can check
    for themselves that the imaginary part vanishes.
    """
    if not _is_su2(a, tol):
        raise NonSpecialUnitaryInput("left factor is not in SU(2)")
    if not _is_su2(b, tol):
        raise NonSpecialUnitaryInput("right factor is not in SU(2)")
    return R_DAG @ tensor(a, b) @ R


@dataclass(frozen=True, slots=True)
class So4Element:
    """Upper-triangle entries of a real antisymmetric 4x4 matrix."""

    f12: float = 0.0
    f13: float = 0.0
    f14: float = 0.0
    f23: float = 0.0
    f24: float = 0.0
    f34: float = 0.0

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4))
        m[0, 1], m[0, 2], m[0, 3] = self.f12, self.f13, self.f14
        m[1, 2], m[1, 3], m[2, 3] = self.f23, self.f24, self.f34
        return m - m.T

    @classmethod
    def from_matrix(cls, m) -> So4Element:
        m = np.real(np.asarray(m))
        return cls(m[0, 1], m[0, 2], m[0, 3], m[1, 2], m[1, 3], m[2, 3])

    def as_tuple(self) -> tuple:
        return (self.f12, self.f13, self.f14, self.f23, self.f24, self.f34)

    def __add__(self, other: So4Element) -> So4Element:
        return So4Element(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: So4Element) -> So4Element:
        return So4Element(*(x - y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, k: float) -> So4Element:
        return So4Element(*(k * x for x in self.as_tuple()))

    __rmul__ = __mul__


def algebra_map(a: Su2Vector, b: Su2Vector) -> So4Element:
    """Closed form of ``i R^dag (a (x) 1 + 1 (x) b) R``."""
    a1, a2, a3 = a
    b1, b2, b3 = b
    return So4Element(
        f12=a1 + b1,
        f13=a2 - b2,
        f14=a3 + b3,
        f23=a3 - b3,
        f24=-(a2 + b2),
        f34=a1 - b1,
    )


def algebra_conjugation(a: Su2Vector, b: Su2Vector) -> np.ndarray:
    """``i R^dag (a (x) 1 + 1 (x) b) R`` computed by explicit matrix products."""
    m = tensor(to_matrix(a), I2) + tensor(I2, to_matrix(b))
    return 1j * (R_DAG @ m @ R)


def inverse_algebra_map(f: So4Element) -> tuple[Su2Vector, Su2Vector]:
    """Split ``A`` in so(4) into ``(a, b)`` with ``R A R^dag = i(a (x) 1 + 1 (x) b)``."""
    a = Su2Vector(
        (f.f12 + f.f34) / 2,
        (f.f13 - f.f24) / 2,
        (f.f14 + f.f23) / 2,
    )
    b = Su2Vector(
        (f.f12 - f.f34) / 2,
        -(f.f13 + f.f24) / 2,
        (f.f14 - f.f23) / 2,
    )
    return a, b


def hodge_star(f: So4Element) -> So4Element:
    """``(*F)_ij = 1/2 sum_kl eps_ijkl F_kl`` with ``eps_1234 = 1``."""
    return So4Element(
        f12=f.f34,
        f13=-f.f24,
        f14=f.f23,
        f23=f.f14,
        f24=-f.f13,
        f34=f.f12,
    )


@dataclass(frozen=True)
class TensorDecomposition:
    """Real coefficients ``c[i, j]`` of ``sum c[i, j] s_i (x) s_j`` (``s_0 = 1``).

    ``coeffs[0, 0]`` is always zero; only the traceless part is represented.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        if c.shape != (4, 4):
            raise ValueError("coefficient table must be 4x4")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, key) -> float:
        """Look up by index pair ``(i, j)`` or by label such as ``"ZY"``."""
        i, j = _idx(key) if isinstance(key, str) else key
        return float(self.coeffs[i, j])

    @classmethod
    def project(cls, m, imag_tol: float = 1e-12) -> TensorDecomposition:
        """Project a Hermitian 4x4 matrix onto the traceless Pauli tensor basis."""
        m = np.asarray(m)
        c = np.empty((4, 4), dtype=complex)
        for i in range(4):
            for j in range(4):
                c[i, j] = np.trace(PAULI_TENSORS[i][j] @ m) / 4
        c[0, 0] = 0
        if np.abs(c.imag).max() > imag_tol:
            raise ValueError("matrix is not Hermitian: complex tensor coefficients")
        return cls(c.real)

    def matrix(self) -> np.ndarray:
        out = np.zeros((4, 4), dtype=complex)
        for i in range(4):
            for j in range(4):
                if (i, j) != (0, 0) and self.coeffs[i, j] != 0:
                    out += self.coeffs[i, j] * PAULI_TENSORS[i][j]
        return out

    def support(self, tol: float = 1e-12) -> set[str]:
        """Labels of basis elements whose coefficient exceeds ``tol``."""
        return {
            PAULI_LABELS[i] + PAULI_LABELS[j]
            for i in range(4)
            for j in range(4)
            if abs(self.coeffs[i, j]) > tol
        }

    def as_dict(self) -> dict[str, float]:
        return {
            PAULI_LABELS[i] + PAULI_LABELS[j]: float(self.coeffs[i, j])
            for i in range(4)
            for j in range(4)
            if (i, j) != (0, 0)
        }


def _idx(label: str) -> tuple[int, int]:
    return PAULI_LABELS.index(label[0]), PAULI_LABELS.index(label[1])


# The 9-dimensional image of traceless real symmetric matrices under R^dag . R
SYMMETRIC_SECTOR = ("XI", "ZI", "IY", "IZ", "ZY", "XZ", "ZZ", "XY", "YX")


def conjugate_hamiltonian(h: Hamiltonian4) -> TensorDecomposition:
    """Tensor decomposition of ``R^dag H R`` from the closed-form coefficients."""
    c = np.zeros((4, 4))
    c[_idx("XI")] = (h.h13 - h.h24) / 2
    c[_idx("ZI")] = (h.h14 + h.h23) / 2
    c[_idx("IY")] = (h.h13 + h.h24) / 2
    c[_idx("IZ")] = (h.h14 - h.h23) / 2
    c[_idx("ZY")] = (h.h12 + h.h34) / 2
    c[_idx("XZ")] = -(h.h12 - h.h34) / 2
    return TensorDecomposition(c)


def conjugate_traceless_symmetric(k, tol: float = 1e-10) -> TensorDecomposition:
    """Tensor decomposition of ``R^dag K R`` for real symmetric traceless ``K``.

    Computed by projection onto the Pauli tensor basis; the result is
    supported on :data:`SYMMETRIC_SECTOR`.
    """
    k = np.asarray(k)
    if k.shape != (4, 4):
        raise NotSymmetricTraceless("K must be 4x4")
    if np.abs(np.imag(k)).max() > tol or np.abs(k - k.T).max() > tol:
        raise NotSymmetricTraceless("K is not real symmetric")
    if abs(np.trace(k)) > tol:
        raise NotSymmetricTraceless(f"K is not traceless (trace {np.trace(k).real:.3g})")
    return TensorDecomposition.project(R_DAG @ k @ R)
