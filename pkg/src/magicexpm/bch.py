"""Closed-form Baker-Campbell-Hausdorff compositions.

For SU(2), ``exp(iX) exp(iY) = exp(iZ)`` with

    Z = alpha X + beta Y + gamma (i/2)[X, Y]

and, in vector form, ``z = alpha x + beta y - gamma (x cross y)``.

For the checkerboard class of 4x4 real symmetric matrices (zero diagonal,
zero (1,3) and (2,4) entries), conjugation by ``S R`` splits both arguments
into two independent su(2) pairs, and the SU(2) formula applied to each pair
gives the composition in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomain, UnsupportedOrder
from .hamiltonian import Hamiltonian4
from .magic import R, R_DAG, S
from .pauli import Su2Vector, cross, dot, sinc, to_matrix
from .smallmat import I2, commutator, tensor

RHO2_CLAMP = 1e-9
# |z| within ~1e-6 of pi: the composed element is essentially -1
BRANCH_RHO = 1e-6
_SERIES_CUTOFF = 1e-6


@dataclass(frozen=True, slots=True)
class BchCoefficients:
    alpha: float
    beta: float
    gamma: float
    rho: float


def _asin_ratio(rho: float, w: float) -> float:
    """theta/rho where sin(theta) = rho, cos(theta) = w and theta is in [0, pi]."""
    if w > 0 and rho < _SERIES_CUTOFF:
        r2 = rho * rho
        return 1.0 + r2 / 6.0 + 3.0 * r2 * r2 / 40.0
    return math.atan2(rho, w) / rho


def su2_bch_coeffs(x: Su2Vector, y: Su2Vector) -> BchCoefficients:
    """alpha, beta, gamma and rho for the pair ``(x, y)``.

    ``sin^-1(rho)`` is taken on the branch fixed by the sign of the scalar
    part ``cos|x| cos|y| - sin|x| sin|y| (x.y)/(|x||y|)`` of the product, so
    the result is the principal logarithm for every ``|z| < pi``.
    """
    nx = x.norm()
    ny = y.norm()
    sx, sy = sinc(nx), sinc(ny)
    snx, sny = math.sin(nx), math.sin(ny)
    cx, cy = math.cos(nx), math.cos(ny)
    d = dot(x, y)

    rho2 = (
        snx * snx * cy * cy
        + sny * sny
        - sx * sx * sy * sy * d * d
        + 2 * sx * cx * sy * cy * d
    )
    if rho2 > 1 + RHO2_CLAMP:
        raise OutOfDomain(f"rho^2 = {rho2!r} exceeds 1")
    rho = math.sqrt(min(max(rho2, 0.0), 1.0))
    w = cx * cy - sx * sy * d
    if w < 0 and rho < BRANCH_RHO:
        raise OutOfDomain("composed rotation lies on the branch cut (product is -1)")

    k = _asin_ratio(rho, w)
    return BchCoefficients(alpha=k * sx * cy, beta=k * cx * sy, gamma=k * sx * sy, rho=rho)


def su2_bch(x: Su2Vector, y: Su2Vector) -> Su2Vector:
    """``z`` with ``exp_su2(x) @ exp_su2(y) == exp_su2(z)``."""
    c = su2_bch_coeffs(x, y)
    return c.alpha * x + c.beta * y - c.gamma * cross(x, y)


@dataclass(frozen=True, slots=True)
class CheckerboardSym:
    """Real symmetric 4x4 matrix with entries f1=(1,2), f2=(2,3), f3=(3,4), f4=(1,4)."""

    f1: float = 0.0
    f2: float = 0.0
    f3: float = 0.0
    f4: float = 0.0

    @classmethod
    def from_hamiltonian(cls, h: Hamiltonian4) -> CheckerboardSym:
        if not h.is_checkerboard:
            raise ValueError("Hamiltonian is not checkerboard-class (h13, h24 must vanish)")
        return cls(f1=h.h12, f2=h.h23, f3=h.h34, f4=h.h14)

    def to_hamiltonian(self) -> Hamiltonian4:
        return Hamiltonian4(h12=self.f1, h23=self.f2, h34=self.f3, h14=self.f4)

    def matrix(self) -> np.ndarray:
        return self.to_hamiltonian().matrix()

    def vectors(self) -> tuple[Su2Vector, Su2Vector]:
        """su(2) parts of ``R^dag S A S R = a1 (x) 1 + 1 (x) a2``."""
        f1, f2, f3, f4 = self.f1, self.f2, self.f3, self.f4
        a1 = Su2Vector((f1 - f3) / 2, 0.0, (f4 + f2) / 2)
        a2 = Su2Vector(0.0, (f1 + f3) / 2, (f4 - f2) / 2)
        return a1, a2


@dataclass(frozen=True)
class BchResult:
    """Hermitian ``BCH(A, B)`` with ``exp(iA) exp(iB) = exp(i BCH)``.

    Entries (1,2), (1,4), (2,3), (3,4) are real; (1,3) and (2,4) are purely
    imaginary and stored as their imaginary parts ``e13``, ``e24``.
    """

    e12: float
    e13: float
    e14: float
    e23: float
    e24: float
    e34: float
    pair1: BchCoefficients | None = None
    pair2: BchCoefficients | None = None

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 1] = self.e12
        m[0, 2] = 1j * self.e13
        m[0, 3] = self.e14
        m[1, 2] = self.e23
        m[1, 3] = 1j * self.e24
        m[2, 3] = self.e34
        return m + m.conj().T


def _pair_coeffs(x, y, pair):
    try:
        return su2_bch_coeffs(x, y)
    except OutOfDomain as exc:
        raise OutOfDomain(f"SU(2) pair {pair}: {exc}", pair=pair) from exc


def su4_bch(a: CheckerboardSym, b: CheckerboardSym) -> BchResult:
    f1, f2, f3, f4 = a.f1, a.f2, a.f3, a.f4
    g1, g2, g3, g4 = b.f1, b.f2, b.f3, b.f4
    a1, a2 = a.vectors()
    b1, b2 = b.vectors()
    c1 = _pair_coeffs(a1, b1, 1)
    c2 = _pair_coeffs(a2, b2, 2)
    al1, be1, ga1 = c1.alpha, c1.beta, c1.gamma
    al2, be2, ga2 = c2.alpha, c2.beta, c2.gamma

    fm13, fp13 = (f1 - f3) / 2, (f1 + f3) / 2
    fp42, fm42 = (f4 + f2) / 2, (f4 - f2) / 2
    gm13, gp13 = (g1 - g3) / 2, (g1 + g3) / 2
    gp42, gm42 = (g4 + g2) / 2, (g4 - g2) / 2

    cross1 = fm13 * gp42 - fp42 * gm13
    cross2 = fp13 * gm42 - fm42 * gp13
    return BchResult(
        e12=al1 * fm13 + be1 * gm13 + al2 * fp13 + be2 * gp13,
        e13=ga1 * cross1 - ga2 * cross2,
        e14=al1 * fp42 + be1 * gp42 + al2 * fm42 + be2 * gm42,
        e23=al1 * fp42 + be1 * gp42 - al2 * fm42 - be2 * gm42,
        e24=ga1 * cross1 + ga2 * cross2,
        e34=-al1 * fm13 - be1 * gm13 + al2 * fp13 + be2 * gp13,
        pair1=c1,
        pair2=c2,
    )


def su4_bch_conjugated(a: CheckerboardSym, b: CheckerboardSym) -> np.ndarray:
    """``BCH(A, B)`` assembled as ``S R (Z1 (x) 1 + 1 (x) Z2) R^dag S``.

    Same mathematics as :func:`su4_bch` but through explicit matrix products
    rather than the entry formulas.
    """
    a1, a2 = a.vectors()
    b1, b2 = b.vectors()
    z1 = su2_bch(a1, b1)
    z2 = su2_bch(a2, b2)
    inner = tensor(to_matrix(z1), I2) + tensor(I2, to_matrix(z2))
    return S @ R @ inner @ R_DAG @ S


def bch_series(a, b, order: int) -> np.ndarray:
    """Truncated series for ``log(exp(A) exp(B))`` through total degree ``order``."""
    if order not in (1, 2, 3, 4):
        raise UnsupportedOrder(f"order must be 1..4, got {order!r}")
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = a + b
    if order >= 2:
        ab = commutator(a, b)
        out = out + ab / 2
    if order >= 3:
        out = out + (commutator(a, ab) + commutator(ab, b)) / 12
    if order >= 4:
        out = out - commutator(b, commutator(a, ab)) / 24
    return out
