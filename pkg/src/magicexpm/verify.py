"""Randomised self-verification of every closed form against the oracles.

Each check draws one random instance and returns ``None`` on success or a
JSON-serialisable counterexample on failure. The oracle checks run first:
the closed forms are only compared against oracles that already agree with
each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .bch import CheckerboardSym, su2_bch, su4_bch, su4_bch_conjugated
from .evolve import (
    evolve_approx,
    evolve_exact_checkerboard,
    evolve_exact_cross,
    evolve_oracle,
    exact_cross_factors,
)
from .hamiltonian import Hamiltonian4
from .magic import (
    R,
    R_DAG,
    S,
    algebra_conjugation,
    algebra_map,
    conjugate_hamiltonian,
    group_map,
    hodge_star,
    inverse_algebra_map,
)
from .pauli import Su2Vector, exp_su2, to_matrix
from .smallmat import I2, dagger, frobenius_distance, is_real_orthogonal


def random_hermitian(rng, n=4, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = (m + dagger(m)) / 2
    return scale * h / np.linalg.norm(h)


def random_vector(rng, max_norm=1.0) -> Su2Vector:
    """Uniform in the ball of radius ``max_norm``."""
    v = rng.normal(size=3)
    v *= max_norm * rng.uniform() ** (1 / 3) / np.linalg.norm(v)
    return Su2Vector.from_array(v)


def random_su2(rng) -> np.ndarray:
    return exp_su2(random_vector(rng, math.pi))


def random_cross(rng, scale=1.0) -> Hamiltonian4:
    h13, h14, h23, h24 = rng.uniform(-scale, scale, 4)
    return Hamiltonian4(h13=h13, h14=h14, h23=h23, h24=h24)


def random_checkerboard(rng, scale=1.0) -> Hamiltonian4:
    h12, h14, h23, h34 = rng.uniform(-scale, scale, 4)
    return Hamiltonian4(h12=h12, h14=h14, h23=h23, h34=h34)


def _cmat(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _fail(**kw):
    return {k: (_cmat(v) if isinstance(v, np.ndarray) else v) for k, v in kw.items()}


def check_oracle_exponentials(rng):
    h = random_hermitian(rng, scale=rng.uniform(0, 50))
    err = frobenius_distance(oracle.expm_hermitian(1, h, 1.0), oracle.expm_series(1j * h))
    if err > 1e-11:
        return _fail(H=h, error=err)


def check_oracle_logm(rng):
    z = random_hermitian(rng, scale=rng.uniform(0, 1))
    iz = 1j * z
    err = frobenius_distance(oracle.logm_unitary(oracle.expm_series(iz)), iz)
    if err > 1e-11:
        return _fail(Z=z, error=err)


def check_makhlin_so4(rng):
    a, b = random_su2(rng), random_su2(rng)
    g = group_map(a, b)
    det = np.linalg.det(g).real
    if not is_real_orthogonal(g, 1e-12) or abs(det - 1) > 1e-10:
        return _fail(A=a, B=b, det=det)


def check_algebra_correspondence(rng):
    a, b = random_vector(rng, 2.0), random_vector(rng, 2.0)
    f = algebra_map(a, b)
    err = float(np.abs(algebra_conjugation(a, b) - f.matrix()).max())
    a2, b2 = inverse_algebra_map(f)
    rt = max(abs(u - v) for u, v in zip((*a, *b), (*a2, *b2)))
    star = hodge_star(f)
    sd_a, sd_b = inverse_algebra_map(0.5 * (f + star))
    asd_a, asd_b = inverse_algebra_map(0.5 * (f - star))
    split = max(sd_b.norm(), asd_a.norm(), (sd_a - a).norm(), (asd_b - b).norm())
    if err > 1e-13 or rt > 1e-14 or split > 1e-14:
        return _fail(a=list(a), b=list(b), conj_error=err, roundtrip=rt, hodge_split=split)


def check_exp_su2(rng):
    v = random_vector(rng, 20.0)
    u = exp_su2(v)
    defect = frobenius_distance(dagger(u) @ u, I2)
    det = abs(np.linalg.det(u) - 1)
    err = frobenius_distance(u, oracle.expm_series(1j * to_matrix(v)))
    inv = frobenius_distance(u @ exp_su2(-v), I2)
    if max(defect, det, inv) > 1e-12 or err > 1e-11:
        return _fail(v=list(v), unitarity=defect, det=det, oracle_error=err, inverse=inv)


def check_conjugate_hamiltonian(rng):
    h = Hamiltonian4(*rng.uniform(-1, 1, 6))
    err = frobenius_distance(conjugate_hamiltonian(h).matrix(), R_DAG @ h.matrix() @ R)
    if err > 1e-12:
        return _fail(H=h.as_dict(), error=err)


def check_exact_cross(rng):
    h = random_cross(rng)
    t = rng.uniform(-10, 10)
    err = frobenius_distance(evolve_exact_cross(h, t), evolve_oracle(h, t))
    u1, u2 = exact_cross_factors(h, t)
    comm = frobenius_distance(u1 @ u2, u2 @ u1)
    if err > 1e-11 or comm > 1e-12:
        return _fail(H=h.as_dict(), t=t, error=err, commutator=comm)


def check_exact_checkerboard(rng):
    h = random_checkerboard(rng)
    t = rng.uniform(-10, 10)
    u = evolve_exact_checkerboard(h, t)
    err = frobenius_distance(u, evolve_oracle(h, t))
    path = frobenius_distance(u, S @ evolve_exact_cross(h.swap_relabel(), t) @ S)
    if err > 1e-11 or path > 1e-12:
        return _fail(H=h.as_dict(), t=t, error=err, swap_path=path)


def check_approx_exact_on_cross(rng):
    h = random_cross(rng)
    t = rng.uniform(-10, 10)
    err = frobenius_distance(evolve_approx(h, t), evolve_exact_cross(h, t))
    if err > 1e-12:
        return _fail(H=h.as_dict(), t=t, error=err)


def check_su2_bch(rng):
    x, y = random_vector(rng), random_vector(rng)
    z = su2_bch(x, y)
    err = frobenius_distance(exp_su2(z), exp_su2(x) @ exp_su2(y))
    if err > 1e-11:
        return _fail(x=list(x), y=list(y), error=err)


def check_su4_bch(rng):
    a = CheckerboardSym(*rng.uniform(-0.5, 0.5, 4))
    b = CheckerboardSym(*rng.uniform(-0.5, 0.5, 4))
    res = su4_bch(a, b)
    z = res.matrix()
    lhs = oracle.expm_hermitian(1, a.matrix(), 1.0) @ oracle.expm_hermitian(1, b.matrix(), 1.0)
    err = frobenius_distance(lhs, oracle.expm_hermitian(1, z, 1.0))
    path = float(np.abs(z - su4_bch_conjugated(a, b)).max())
    if err > 1e-10 or path > 1e-13:
        return _fail(A=[a.f1, a.f2, a.f3, a.f4], B=[b.f1, b.f2, b.f3, b.f4], error=err, entry_vs_conjugation=path)


@dataclass(frozen=True)
class Suite:
    name: str
    check: object


SUITES = (
    Suite("oracle-exponentials-agree", check_oracle_exponentials),
    Suite("oracle-logm-roundtrip", check_oracle_logm),
    Suite("makhlin-so4-membership", check_makhlin_so4),
    Suite("algebra-correspondence", check_algebra_correspondence),
    Suite("exp-su2", check_exp_su2),
    Suite("conjugated-hamiltonian", check_conjugate_hamiltonian),
    Suite("exact-cross-vs-oracle", check_exact_cross),
    Suite("exact-checkerboard-vs-oracle", check_exact_checkerboard),
    Suite("approx-exact-on-cross-class", check_approx_exact_on_cross),
    Suite("su2-bch-vs-product", check_su2_bch),
    Suite("su4-bch-vs-product", check_su4_bch),
)


@dataclass
class SuiteResult:
    name: str
    passed: int
    trials: int
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


def run_suites(seed: int, trials: int, suites=SUITES) -> list[SuiteResult]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    results = []
    for k, suite in enumerate(suites):
        rng = np.random.default_rng([seed, k])
        res = SuiteResult(suite.name, 0, trials)
        for trial in range(trials):
            try:
                bad = suite.check(rng)
            except Exception as exc:  # a crash is a failure, reported like one
                bad = {"exception": f"{type(exc).__name__}: {exc}"}
            if bad is None:
                res.passed += 1
            elif res.counterexample is None:
                res.counterexample = {"suite": suite.name, "trial": trial, **bad}
        results.append(res)
    return results
