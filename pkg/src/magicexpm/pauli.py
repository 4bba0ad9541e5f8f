"""su(2) as real 3-vectors, and the closed-form SU(2) exponential.

A vector ``x = (x1, x2, x3)`` stands for the traceless Hermitian matrix
``X = x1*s1 + x2*s2 + x3*s3``. Under this correspondence
``Tr(XY)/2 = x.y`` and ``-(i/2)[X, Y] = x cross y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .smallmat import I2, frozen

SIGMA0 = I2
SIGMA1 = frozen([[0, 1], [1, 0]])
SIGMA2 = frozen([[0, -1j], [1j, 0]])
SIGMA3 = frozen([[1, 0], [0, -1]])
SIGMA = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)

_SERIES_CUTOFF = 1e-6


def sinc(r: float) -> float:
    """sin(r)/r with the removable singularity at 0 filled in."""
    if abs(r) < _SERIES_CUTOFF:
        r2 = r * r
        return 1.0 - r2 / 6.0 + r2 * r2 / 120.0
    return math.sin(r) / r


@dataclass(frozen=True, slots=True)
class Su2Vector:
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    @classmethod
    def from_array(cls, v) -> Su2Vector:
        a, b, c = (float(x) for x in v)
        return cls(a, b, c)

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    def __iter__(self):
        yield self.x1
        yield self.x2
        yield self.x3

    def norm(self) -> float:
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)

    def __add__(self, other: Su2Vector) -> Su2Vector:
        return Su2Vector(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: Su2Vector) -> Su2Vector:
        return Su2Vector(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __mul__(self, k: float) -> Su2Vector:
        return Su2Vector(k * self.x1, k * self.x2, k * self.x3)

    __rmul__ = __mul__

    def __neg__(self) -> Su2Vector:
        return Su2Vector(-self.x1, -self.x2, -self.x3)


ZERO = Su2Vector()


def to_matrix(v: Su2Vector) -> np.ndarray:
    x1, x2, x3 = v
    return np.array([[x3, x1 - 1j * x2], [x1 + 1j * x2, -x3]], dtype=complex)


def dot(x: Su2Vector, y: Su2Vector) -> float:
    return x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3


def cross(x: Su2Vector, y: Su2Vector) -> Su2Vector:
    return Su2Vector(
        x.x2 * y.x3 - x.x3 * y.x2,
        x.x3 * y.x1 - x.x1 * y.x3,
        x.x1 * y.x2 - x.x2 * y.x1,
    )


def exp_su2(v: Su2Vector) -> np.ndarray:
    """exp(i(x1 s1 + x2 s2 + x3 s3)) = cos(r) 1 + i sin(r)/r X, with r = |x|."""
    r = v.norm()
    c = math.cos(r)
    s = sinc(r)
    x1, x2, x3 = v
    return np.array(
        [
            [c + 1j * s * x3, 1j * s * (x1 - 1j * x2)],
            [1j * s * (x1 + 1j * x2), c - 1j * s * x3],
        ],
        dtype=complex,
    )
