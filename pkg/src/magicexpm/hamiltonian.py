"""The zero-diagonal real symmetric four-level Hamiltonian."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

CLASS_TOL = 1e-14

COUPLING_NAMES = ("h12", "h13", "h14", "h23", "h24", "h34")


@dataclass(frozen=True, slots=True)
class Hamiltonian4:
    """Six real couplings ``h_ij`` (i < j) of a 4x4 real symmetric matrix with zero diagonal."""

    h12: float = 0.0
    h13: float = 0.0
    h14: float = 0.0
    h23: float = 0.0
    h24: float = 0.0
    h34: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if not math.isfinite(v):
                raise ValueError(f"coupling {f.name} is not finite: {v!r}")

    @classmethod
    def from_mapping(cls, couplings) -> Hamiltonian4:
        unknown = set(couplings) - set(COUPLING_NAMES)
        if unknown:
            raise ValueError(f"unknown coupling names: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in couplings.items()})

    @classmethod
    def from_matrix(cls, m, tol: float = 1e-12) -> Hamiltonian4:
        m = np.asarray(m)
        if np.abs(np.imag(m)).max() > tol or np.abs(m - m.T).max() > tol:
            raise ValueError("matrix is not real symmetric")
        if np.abs(np.diag(m)).max() > tol:
            raise ValueError("matrix has a non-zero diagonal")
        m = np.real(m)
        return cls(m[0, 1], m[0, 2], m[0, 3], m[1, 2], m[1, 3], m[2, 3])

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in COUPLING_NAMES}

    def matrix(self) -> np.ndarray:
        h12, h13, h14, h23, h24, h34 = (getattr(self, n) for n in COUPLING_NAMES)
        return np.array(
            [
                [0.0, h12, h13, h14],
                [h12, 0.0, h23, h24],
                [h13, h23, 0.0, h34],
                [h14, h24, h34, 0.0],
            ],
            dtype=complex,
        )

    @property
    def is_cross(self) -> bool:
        return abs(self.h12) <= CLASS_TOL and abs(self.h34) <= CLASS_TOL

    @property
    def is_checkerboard(self) -> bool:
        return abs(self.h13) <= CLASS_TOL and abs(self.h24) <= CLASS_TOL

    def max_coupling(self) -> float:
        return max(abs(getattr(self, n)) for n in COUPLING_NAMES)

    def swap_relabel(self) -> Hamiltonian4:
        """Couplings of ``S H S``, which exchanges levels 2 and 3.

        For a checkerboard ``H`` the result is cross-class.
        """
        return Hamiltonian4(
            h12=self.h13, h13=self.h12, h14=self.h14,
            h23=self.h23, h24=self.h34, h34=self.h24,
        )
