import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from magicexpm import oracle
from magicexpm.bch import (
    CheckerboardSym,
    bch_series,
    su2_bch,
    su2_bch_coeffs,
    su4_bch,
    su4_bch_conjugated,
)
from magicexpm.errors import OutOfDomain, UnsupportedOrder
from magicexpm.hamiltonian import Hamiltonian4
from magicexpm.pauli import ZERO, Su2Vector, exp_su2, to_matrix
from magicexpm.smallmat import commutator, frobenius_distance
from magicexpm.verify import random_vector

vectors = st.tuples(*[st.floats(-0.9, 0.9)] * 3).map(lambda v: Su2Vector(*v)).filter(
    lambda v: v.norm() < 1.5
)


def _vclose(u, v, tol):
    return max(abs(a - b) for a, b in zip(u, v)) <= tol


def _expi(m):
    return oracle.expm_hermitian(1, m, 1.0)


class TestSu2Coefficients:
    def test_zero_limits(self):
        c = su2_bch_coeffs(ZERO, ZERO)
        assert (c.alpha, c.beta, c.gamma, c.rho) == (1.0, 1.0, 1.0, 0.0)

    def test_quarter_turns(self):
        x = Su2Vector(math.pi / 4, 0, 0)
        c = su2_bch_coeffs(x, x)
        assert c.rho == pytest.approx(1.0, abs=1e-15)
        assert c.alpha == pytest.approx(1.0, abs=1e-13)
        assert c.beta == pytest.approx(1.0, abs=1e-13)
        assert _vclose(su2_bch(x, x), (math.pi / 2, 0, 0), 1e-13)

    def test_rho_in_unit_interval(self, rng):
        for _ in range(2000):
            c = su2_bch_coeffs(random_vector(rng), random_vector(rng))
            assert 0.0 <= c.rho <= 1.0
            assert all(map(math.isfinite, (c.alpha, c.beta, c.gamma)))

    def test_small_rho_series_is_continuous(self):
        x = Su2Vector(1e-7, 0, 0)
        y = Su2Vector(0, 1e-7, 0)
        assert _vclose(su2_bch(x, y), (1e-7, 1e-7, -1e-14), 1e-20)

    def test_branch_cut(self):
        x = Su2Vector(math.pi / 2, 0, 0)
        with pytest.raises(OutOfDomain):
            su2_bch(x, x)


class TestSu2Bch:
    @settings(max_examples=200, deadline=None)
    @given(vectors)
    def test_right_identity(self, x):
        assert _vclose(su2_bch(x, ZERO), x, 1e-13)
        assert _vclose(su2_bch(ZERO, x), x, 1e-13)

    @given(vectors, st.floats(-1.5, 1.5))
    def test_parallel(self, x, s):
        z = su2_bch(x, s * x)
        assert _vclose(z, (1 + s) * x, 1e-12)

    def test_oracle_product(self, rng):
        worst = 0.0
        for _ in range(10_000):
            x, y = random_vector(rng), random_vector(rng)
            err = frobenius_distance(exp_su2(su2_bch(x, y)), exp_su2(x) @ exp_su2(y))
            worst = max(worst, err)
        assert worst <= 1e-11

    def test_oracle_logm(self, rng):
        for _ in range(500):
            x, y = random_vector(rng, 0.5), random_vector(rng, 0.5)
            log = oracle.logm_unitary(exp_su2(x) @ exp_su2(y))
            assert frobenius_distance(1j * to_matrix(su2_bch(x, y)), log) <= 1e-11

    def test_principal_branch_beyond_half_turn(self):
        # |z| > pi/2 although |x|, |y| <= 1: needs the obtuse branch of arcsin
        x = Su2Vector(1.0, 0, 0)
        y = Su2Vector(0.9, 0.3, 0)
        z = su2_bch(x, y)
        assert z.norm() > math.pi / 2
        assert frobenius_distance(exp_su2(z), exp_su2(x) @ exp_su2(y)) <= 1e-12

    def test_commutator_sign(self):
        x = Su2Vector(0.01, 0, 0)
        y = Su2Vector(0, 0.01, 0)
        # exp(iX)exp(iY) = exp(iX + iY - [X, Y]/2 + ...), and [s1, s2] = 2i s3
        assert su2_bch(x, y).x3 == pytest.approx(-1e-4, rel=1e-3)


def _random_sym(rng, scale=0.5):
    return CheckerboardSym(*rng.uniform(-scale, scale, 4))


class TestSu4Bch:
    def test_b_zero(self, rng):
        for _ in range(50):
            a = _random_sym(rng)
            res = su4_bch(a, CheckerboardSym())
            assert res.e13 == 0.0 and res.e24 == 0.0
            assert np.abs(res.matrix() - a.matrix()).max() <= 1e-13

    def test_doubling(self, rng):
        for _ in range(50):
            a = _random_sym(rng)
            assert np.abs(su4_bch(a, a).matrix() - 2 * a.matrix()).max() <= 1e-13

    def test_closure_pattern(self, rng):
        m = su4_bch(_random_sym(rng), _random_sym(rng)).matrix()
        assert np.array_equal(m, m.conj().T)
        assert np.all(np.diag(m) == 0)
        for i, j in [(0, 1), (0, 3), (1, 2), (2, 3)]:
            assert m[i, j].imag == 0
        for i, j in [(0, 2), (1, 3)]:
            assert m[i, j].real == 0

    def test_product_oracle(self, rng):
        worst = 0.0
        for _ in range(2000):
            a, b = _random_sym(rng), _random_sym(rng)
            lhs = _expi(a.matrix()) @ _expi(b.matrix())
            worst = max(worst, frobenius_distance(lhs, _expi(su4_bch(a, b).matrix())))
        assert worst <= 1e-10

    def test_logm_oracle(self, rng):
        for _ in range(300):
            a, b = _random_sym(rng), _random_sym(rng)
            log = oracle.logm_unitary(_expi(a.matrix()) @ _expi(b.matrix()))
            assert np.abs(-1j * log - su4_bch(a, b).matrix()).max() <= 1e-10

    def test_entries_match_conjugation_path(self, rng):
        for _ in range(1000):
            a, b = _random_sym(rng, 1.0), _random_sym(rng, 1.0)
            try:
                m = su4_bch(a, b).matrix()
            except OutOfDomain:
                continue
            assert np.abs(m - su4_bch_conjugated(a, b)).max() <= 1e-13

    def test_hamiltonian_round_trip(self):
        h = Hamiltonian4(h12=1, h23=2, h34=3, h14=4)
        a = CheckerboardSym.from_hamiltonian(h)
        assert (a.f1, a.f2, a.f3, a.f4) == (1, 2, 3, 4)
        assert a.to_hamiltonian() == h
        with pytest.raises(ValueError):
            CheckerboardSym.from_hamiltonian(Hamiltonian4(h13=1))

    def test_out_of_domain_names_pair(self):
        # pair 1 gets a1 = b1 = (pi/2, 0, 0): the product in that factor is -1
        a = CheckerboardSym(f1=math.pi / 2, f3=-math.pi / 2)
        with pytest.raises(OutOfDomain) as exc:
            su4_bch(a, a)
        assert exc.value.pair == 1
        b = CheckerboardSym(f1=math.pi / 2, f3=math.pi / 2)
        with pytest.raises(OutOfDomain) as exc:
            su4_bch(b, b)
        assert exc.value.pair == 2


class TestBchSeries:
    def test_order_one(self, rng):
        a, b = rng.normal(size=(2, 4, 4))
        assert np.array_equal(bch_series(a, b, 1), a + b)

    def test_commuting(self):
        a = np.diag([1.0, 2.0, 3.0, 4.0])
        b = np.diag([0.5, -1.0, 0.0, 2.0])
        for order in (1, 2, 3, 4):
            assert np.abs(bch_series(a, b, order) - (a + b)).max() <= 1e-15

    @pytest.mark.parametrize("order", [0, 5, -1])
    def test_unsupported(self, order):
        with pytest.raises(UnsupportedOrder):
            bch_series(np.eye(4), np.eye(4), order)

    def test_convention_against_su2(self):
        x = Su2Vector(0.02, -0.01, 0.03)
        y = Su2Vector(-0.01, 0.025, 0.01)
        series = bch_series(1j * to_matrix(x), 1j * to_matrix(y), 4)
        closed = 1j * to_matrix(su2_bch(x, y))
        assert np.abs(series - closed).max() <= 1e-8
        # the opposite ordering differs at second order
        other = bch_series(1j * to_matrix(y), 1j * to_matrix(x), 4)
        assert np.abs(other - closed).max() > 1e-5

    def test_fifth_order_remainder(self, rng):
        a0, b0 = _random_sym(rng, 1.0), _random_sym(rng, 1.0)

        def remainder(eps):
            a = CheckerboardSym(*(eps * f for f in (a0.f1, a0.f2, a0.f3, a0.f4)))
            b = CheckerboardSym(*(eps * f for f in (b0.f1, b0.f2, b0.f3, b0.f4)))
            series = bch_series(1j * a.matrix(), 1j * b.matrix(), 4)
            return np.linalg.norm(1j * su4_bch(a, b).matrix() - series)

        ratio = remainder(0.1) / remainder(0.05)
        assert ratio == pytest.approx(32.0, rel=0.1)

    def test_commutator_terms(self, rng):
        a, b = 1e-3 * rng.normal(size=(2, 4, 4))
        d = bch_series(a, b, 2) - bch_series(a, b, 1)
        assert np.allclose(d, commutator(a, b) / 2, atol=1e-20)
