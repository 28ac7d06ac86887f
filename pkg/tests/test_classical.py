import cmath
import math

import pytest
from scipy.integrate import quad

from ffhyper import classical, errors


def _params(a, b, c, x, **kw):
    return classical.ClassicalFdParams(a, tuple(b), c, tuple(x), **kw)


def test_pochhammer():
    assert classical.pochhammer(3, 0) == 1
    assert classical.pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert classical.pochhammer(0.5, 3) == pytest.approx(1.875)
    assert classical.pochhammer(-2, 4) == 0  # hits the zero factor
    with pytest.raises(ValueError):
        classical.pochhammer(1, -1)


def test_beta_oracles():
    assert classical.beta(2, 3) == pytest.approx(1 / 12)
    assert classical.beta(0.5, 0.5) == pytest.approx(math.pi)
    got, _ = quad(lambda t: t ** 1.5 * (1 - t) ** 2.5, 0, 1,
                  epsabs=1e-12, epsrel=1e-12)
    assert classical.beta(2.5, 3.5) == pytest.approx(got, abs=1e-10)


def test_fd_series_base_cases():
    # all-zero arguments: only the S = 0 term survives
    p = _params(0.3, [0.5, 0.7], 1.1, [0, 0])
    assert classical.fd_series(p) == pytest.approx(1)
    # c = a collapses to a product of binomials: prod (1-x_j)^(-b_j)
    p = _params(0.7, [1, 2], 0.7, [0.5, 0.25], M=200)
    want = (1 - 0.5) ** -1 * (1 - 0.25) ** -2
    assert classical.fd_series(p) == pytest.approx(want, abs=1e-10)


def test_fd_series_single_slot_is_gauss():
    a, b, c, x = 0.4, 0.9, 1.7, -0.35
    p = _params(a, [b], c, [x], M=80)
    acc, term = 0j, 1 + 0j
    for k in range(80):
        acc += term
        term *= (a + k) * (b + k) * x / ((k + 1) * (c + k))
    assert classical.fd_series(p) == pytest.approx(acc, abs=1e-13)


def test_fd_series_slot_permutation():
    p = _params(0.6, [0.5, 1.5, 0.25], 2.2, [0.3, -0.2, 0.45], M=70)
    q = _params(0.6, [0.25, 0.5, 1.5], 2.2, [0.45, 0.3, -0.2], M=70)
    assert abs(classical.fd_series(p) - classical.fd_series(q)) < 1e-12


def test_fd_series_truncation_converged():
    p1 = _params(0.5, [0.5, 0.5], 1.5, [0.4, -0.3], M=60)
    p2 = _params(0.5, [0.5, 0.5], 1.5, [0.4, -0.3], M=120)
    assert abs(classical.fd_series(p1) - classical.fd_series(p2)) < 1e-10


def test_divergence_guard():
    with pytest.raises(errors.Diverged):
        classical.fd_series(_params(0.5, [0.5], 1.5, [1.0]))
    with pytest.raises(errors.Diverged):
        classical.fd_series(_params(0.5, [0.5, 0.5], 1.5, [0.2, -1.3]))


def test_domain_violations():
    with pytest.raises(errors.DomainViolation):
        _params(0.5, [0.5], -2, [0.1])  # c non-positive integer
    with pytest.raises(errors.DomainViolation):
        classical.check_integral_formula(_params(0.5, [0.5], 1.5, [0.1]))
    with pytest.raises(errors.DomainViolation):
        classical.check_integral_formula(
            _params(0.5, [0.5, 2.0], 1.5, [0.1, 0.2]))  # Re(b1) < 1
    with pytest.raises(errors.DomainViolation):
        classical.check_mr_reduction(
            _params(0.5, [0.5, 0.5], 1.5, [0.1, 0.2]))  # c != b1 + b2
    with pytest.raises(errors.DomainViolation):
        classical.check_mr_reduction(_params(0.5, [0.5, 1.0], 1.5, [0.1, 1.0]))
    with pytest.raises(ValueError):
        _params(0.5, [0.5, 0.5], 1.5, [0.1])  # len mismatch
    with pytest.raises(ValueError):
        _params(0.5, [0.5], 1.5, [0.1], M=0)


def test_integral_formula_residual():
    p = _params(0.5, [1.25, 1.75, 0.6], 2.4, [0.3, -0.4, 0.2])
    assert classical.check_integral_formula(p) < 1e-8
    # equal first arguments make the inner slot constant in u
    p_eq = _params(0.5, [1.25, 1.75], 2.4, [0.3, 0.3])
    assert classical.check_integral_formula(p_eq) < 1e-12
    # b1 = b2 = 1 strips the u-weights entirely
    p_flat = _params(0.7, [1, 1], 1.9, [0.25, -0.5])
    assert classical.check_integral_formula(p_flat) < 1e-10


def test_integral_formula_complex_parameters():
    p = _params(0.5 + 0.2j, [1.5, 1.25], 2.1 - 0.3j, [0.3, -0.2 + 0.1j])
    assert classical.check_integral_formula(p) < 1e-8


def test_ksum_residual():
    p = _params(0.8, [0.3, 0.9], 1.7, [0.35, -0.45])
    assert classical.check_ksum_formula(p) < 1e-9
    # last argument zero: only the k = 0 term contributes
    p0 = _params(0.8, [0.3, 0.9], 1.7, [0.35, 0.0])
    assert classical.check_ksum_formula(p0) < 1e-12


def test_mr_reduction_residual():
    # arguments chosen so (x_j - x_n)/(1 - x_n) stays inside the unit disk
    b = (0.4, 0.7, 0.15)
    p = _params(0.6, b, sum(b), [0.3, 0.1, -0.4])
    assert classical.check_mr_reduction(p) < 1e-9
    # x_n = 0 leaves the arguments untouched
    p0 = _params(0.6, b, sum(b), [0.2, -0.3, 0.0])
    assert classical.check_mr_reduction(p0) < 1e-13
    # all equal arguments: F_D collapses to (1-x)^(-a) exactly
    pe = _params(0.6, b, sum(b), [0.3, 0.3, 0.3], M=120)
    want = (1 - 0.3) ** -0.6
    assert classical.fd_series(pe) == pytest.approx(want, abs=1e-10)


def test_quadrature_cfg():
    cfg = classical.QuadratureCfg(epsabs=1e-10, epsrel=1e-10, limit=100)
    p = _params(0.5, [1.5, 1.5], 2.0, [0.2, -0.1])
    assert classical.check_integral_formula(p, quadrature_cfg=cfg) < 1e-8
