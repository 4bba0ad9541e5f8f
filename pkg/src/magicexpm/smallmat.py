"""Dense complex 2x2 / 4x4 matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every function
returns a fresh array and never mutates its arguments; module-level constants
are flagged read-only so they can be shared freely.

Tensor products follow ``|ab> = |a> (x) |b>``: the left factor indexes the
high-order qubit, so the basis order is ``|00>, |01>, |10>, |11>``. This is
exactly ``numpy.kron``.
"""

from __future__ import annotations

import numpy as np

CMat2 = np.ndarray
CMat4 = np.ndarray

DEFAULT_TOL = 1e-12


def frozen(a) -> np.ndarray:
    """Return a read-only complex copy of ``a``."""
    out = np.array(a, dtype=complex)
    out.setflags(write=False)
    return out


I2 = frozen(np.eye(2))
I4 = frozen(np.eye(4))


def tensor(a: CMat2, b: CMat2) -> CMat4:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def mul(a, b) -> np.ndarray:
    return np.asarray(a) @ np.asarray(b)


def dagger(a) -> np.ndarray:
    return np.conj(np.asarray(a)).T.copy()


def commutator(a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    return a @ b - b @ a


def frobenius_distance(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def unitarity_defect(a) -> float:
    a = np.asarray(a)
    return frobenius_distance(dagger(a) @ a, np.eye(a.shape[0]))


def hermiticity_defect(a) -> float:
    return frobenius_distance(a, dagger(a))


def _check_tol(tol):
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    _check_tol(tol)
    return unitarity_defect(a) <= tol


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    _check_tol(tol)
    return hermiticity_defect(a) <= tol


def is_real_orthogonal(a, tol: float = DEFAULT_TOL) -> bool:
    """True when ``a`` is real (imaginary part within ``tol``) and ``a^T a = 1``."""
    _check_tol(tol)
    a = np.asarray(a)
    if np.linalg.norm(np.imag(a)) > tol:
        return False
    r = np.real(a)
    return frobenius_distance(r.T @ r, np.eye(r.shape[0])) <= tol


def is_traceless(a, tol: float = DEFAULT_TOL) -> bool:
    _check_tol(tol)
    return abs(np.trace(np.asarray(a))) <= tol
