import math

import numpy as np
import pytest

from bremsdec.numerics import (QuadratureError, QuadratureSpec,
                               integrate_adaptive, integrate_halfline_decaying,
                               solve_cubic)


def test_polynomial_exact():
    val, err = integrate_adaptive(lambda x: 3 * x**2 - 2 * x + 1, -1.0, 2.0)
    assert val == pytest.approx(9.0, abs=1e-12)
    assert err < 1e-10


def test_gaussian_integral():
    val, _ = integrate_adaptive(lambda x: np.exp(-x * x), -8.0, 8.0)
    assert val == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_oscillatory_with_hint():
    # int_0^{20 pi} sin(x) dx = 0, hard without paneling by period
    spec = QuadratureSpec(abs_tol=1e-11, oscillation_period_hint=2 * math.pi)
    val, _ = integrate_adaptive(np.sin, 0.0, 20.0 * math.pi, spec)
    assert abs(val) < 1e-10


def test_cosine_integral_asymptote():
    # int_0^X (1 - cos x)/x dx -> ln X + gamma_E for large X
    spec = QuadratureSpec(oscillation_period_hint=2 * math.pi)
    x_hi = 2.0e3
    val, _ = integrate_adaptive(lambda x: (1.0 - np.cos(x)) / x,
                                1e-300, x_hi, spec)
    assert val == pytest.approx(math.log(x_hi) + 0.5772156649015329,
                                rel=1e-3)


def test_budget_exhaustion_raises_with_estimate():
    spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=4)
    with pytest.raises(QuadratureError) as info:
        integrate_adaptive(lambda x: np.abs(np.sin(50.0 * x)) ** 0.3,
                           0.0, 10.0, spec)
    assert math.isfinite(info.value.value)
    assert info.value.error_estimate > 0


def test_determinism():
    spec = QuadratureSpec(oscillation_period_hint=0.9)
    f = lambda x: np.cos(7.0 * x) / (1.0 + x * x)
    a = integrate_adaptive(f, 0.0, 30.0, spec)
    b = integrate_adaptive(f, 0.0, 30.0, spec)
    assert a == b  # bitwise


def test_halfline_gamma_function():
    # int_0^inf e^{-s} s^3 ds = 6
    val = integrate_halfline_decaying(lambda s: s**3)
    assert val == pytest.approx(6.0, rel=1e-12)


def test_halfline_oscillatory():
    # int_0^inf e^{-s} cos(b s) ds = 1/(1+b^2)
    for b in (0.5, 2.0, 5.0):
        val = integrate_halfline_decaying(lambda s: np.cos(b * s))
        assert val == pytest.approx(1.0 / (1.0 + b * b), rel=1e-10)


def test_halfline_rejects_growth():
    with pytest.raises(ValueError):
        integrate_halfline_decaying(lambda s: np.exp(1.5 * s))


def test_cubic_known_roots():
    roots = solve_cubic(1.0, -6.0, 11.0, -6.0)
    assert np.allclose(sorted(roots.real), [1.0, 2.0, 3.0], atol=1e-12)
    assert np.allclose(roots.imag, 0.0, atol=1e-12)


def test_cubic_conjugate_pair_is_exact():
    roots = solve_cubic(1.0, 0.0, 1.0, -1.0)
    cplx = roots[np.abs(roots.imag) > 1e-12]
    assert cplx.size == 2
    # exact conjugation, not merely approximate
    assert cplx[0] == np.conj(cplx[1])


def test_cubic_wide_scale_separation():
    # roots at 1e-8, 1e-8, 1e8 stress the balancing
    tiny, huge = 1e-8, 1e8
    c2 = -(2 * tiny + huge)
    c1 = tiny * tiny + 2 * tiny * huge
    c0 = -tiny * tiny * huge
    roots = solve_cubic(1.0, c2, c1, c0)
    assert np.max(np.abs(roots.real)) == pytest.approx(huge, rel=1e-10)
    assert np.min(np.abs(roots.real)) == pytest.approx(tiny, rel=1e-4)


def test_cubic_random_residuals():
    rng = np.random.default_rng(42)
    for _ in range(200):
        c = rng.normal(size=4) * 10.0 ** rng.integers(-3, 4, size=4)
        if abs(c[0]) < 1e-12:
            c[0] = 1.0
        roots = solve_cubic(*c)
        z = roots
        res = c[0] * z**3 + c[1] * z**2 + c[2] * z + c[3]
        scale = np.max(np.abs(c)) * np.maximum(1.0, np.abs(z)) ** 3
        assert np.all(np.abs(res) <= 1e-8 * scale)
