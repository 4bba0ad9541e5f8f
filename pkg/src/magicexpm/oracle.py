"""Brute-force reference numerics used to validate the closed forms.

Nothing here imports from the closed-form modules (``pauli``, ``magic``,
``evolve``, ``bch``): a check is only meaningful if the two sides share no
code. Two exponentials are provided, one through a Hermitian
eigendecomposition and one through a scaled Taylor series, so that each can
be checked against the other before either is trusted.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import schur

from .errors import BranchCut, NotHermitian, NotUnitary
from .smallmat import hermiticity_defect, unitarity_defect

JACOBI_THRESHOLD = 1e-15
JACOBI_MAX_SWEEPS = 50
BRANCH_TOL = 1e-8


def jacobi_eigh(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(w, v)`` with real eigenvalues ``w`` (ascending) and unitary
    ``v`` such that ``h = v @ diag(w) @ v^dag``.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    # plain lists: at n = 4 per-element numpy overhead dominates the arithmetic
    a = ((h + h.conj().T) / 2).tolist()
    v = np.eye(n, dtype=complex).tolist()
    scale = math.sqrt(sum(abs(x) ** 2 for row in a for x in row))
    if scale == 0.0:
        return np.zeros(n), np.eye(n, dtype=complex)
    thresh = JACOBI_THRESHOLD * scale

    for _ in range(JACOBI_MAX_SWEEPS):
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r <= thresh:
                    continue
                # phase d makes a[p][q] real, then a real Givens rotation:
                # J = [[c, s], [-s d, c d]], A <- J^dag A J, V <- V J
                d = apq.conjugate() / r
                zeta = (a[q][q].real - a[p][p].real) / (2 * r)
                t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(zeta * zeta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                sd = s * d
                cd = c * d
                for m in (a, v):
                    for row in m:
                        xp = row[p]
                        xq = row[q]
                        row[p] = c * xp - sd * xq
                        row[q] = s * xp + cd * xq
                rp = a[p]
                rq = a[q]
                sdc = sd.conjugate()
                cdc = cd.conjugate()
                for k in range(n):
                    xp = rp[k]
                    xq = rq[k]
                    rp[k] = c * xp - sdc * xq
                    rq[k] = s * xp + cdc * xq
                rp[q] = rq[p] = 0.0
                rp[p] = rp[p].real
                rq[q] = rq[q].real
        off = math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= thresh:
            break

    w = np.array([a[i][i].real for i in range(n)])
    order = np.argsort(w)
    return w[order], np.array(v, dtype=complex)[:, order]


def expm_hermitian(iota: int, h, t: float, tol: float = 1e-10) -> np.ndarray:
    """``exp(iota * i * t * H)`` for Hermitian ``H`` and ``iota`` in {+1, -1}."""
    if iota not in (1, -1):
        raise ValueError("iota must be +1 or -1")
    h = np.asarray(h, dtype=complex)
    if hermiticity_defect(h) > tol:
        raise NotHermitian(f"matrix is not Hermitian (defect {hermiticity_defect(h):.3g})")
    if t == 0:
        return np.eye(h.shape[0], dtype=complex)
    w, v = jacobi_eigh(h)
    phases = np.exp(1j * iota * t * w)
    return (v * phases) @ v.conj().T


def expm_series(m) -> np.ndarray:
    """Matrix exponential by scaling and squaring a truncated Taylor series."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    norm = np.linalg.norm(m, 1)
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    x = m / 2.0**squarings

    out = np.eye(n, dtype=complex)
    term = np.eye(n, dtype=complex)
    for k in range(1, 200):
        term = term @ x / k
        out = out + term
        if np.linalg.norm(term) < 1e-20:
            break

    for _ in range(squarings):
        out = out @ out
    return out


def logm_unitary(u, tol: float = 1e-10) -> np.ndarray:
    """Principal logarithm of a unitary matrix; eigenphases land in (-pi, pi).

    A unitary matrix is normal, so its complex Schur form is diagonal and the
    Schur vectors are an orthonormal eigenbasis even for repeated eigenvalues.
    """
    u = np.asarray(u, dtype=complex)
    if unitarity_defect(u) > tol:
        raise NotUnitary(f"matrix is not unitary (defect {unitarity_defect(u):.3g})")
    t, q = schur(u, output="complex")
    phases = np.angle(np.diag(t))
    if np.any(math.pi - np.abs(phases) < BRANCH_TOL):
        raise BranchCut("an eigenvalue sits on the branch cut at -1")
    return (q * (1j * phases)) @ q.conj().T
