"""The numeric oracle: closed forms, covariance properties, divergence."""

import math
import random

import pytest

from feyngkz.errors import DimensionMismatch, NonConvergent
from feyngkz.quadrature import (QuadratureSpec, convergence_margin,
                                qmc_sobol, quadrature)


def _spec(exponents, coefficients, alpha, beta, tol=1e-10):
    return QuadratureSpec(exponents=exponents, coefficients=coefficients,
                          alpha=alpha, beta=beta, target_tolerance=tol)


def test_one_dimensional_beta_integral():
    """int z^(a-1) (c1 + c2 z)^-b dz = c1^(a-b) c2^-a B(a, b-a)."""
    rng = random.Random(3)
    for _ in range(5):
        a = rng.uniform(0.3, 1.5)
        b = a + rng.uniform(0.4, 2.0)
        c1 = rng.uniform(0.5, 2.0)
        c2 = rng.uniform(0.5, 2.0)
        res = quadrature(_spec([(0,), (1,)], [c1, c2], [a], b))
        exact = (c1 ** (a - b) * c2 ** (-a)
                 * math.gamma(a) * math.gamma(b - a) / math.gamma(b))
        assert abs(res.value - exact) / exact < 1e-8, (a, b)


def test_two_dimensional_closed_form():
    # massless bubble: Gamma(b-a1) Gamma(b-a2) Gamma(a1+a2-b) / Gamma(b)
    a1, a2, b = 1.3, 1.2, 1.9
    res = quadrature(_spec([(1, 0), (0, 1), (1, 1)], [1.0, 1.0, 1.0],
                           [a1, a2], b))
    exact = (math.gamma(b - a1) * math.gamma(b - a2)
             * math.gamma(a1 + a2 - b) / math.gamma(b))
    assert abs(res.value - exact) / exact < 1e-9


def test_overall_scaling_covariance():
    """Scaling every coefficient by lam multiplies the value by lam^-beta."""
    base = _spec([(1, 0), (0, 1), (1, 1)], [1.0, 2.0, 0.7], [1.1, 1.2], 1.8)
    lam = 1.7
    scaled = _spec([(1, 0), (0, 1), (1, 1)], [lam, 2 * lam, 0.7 * lam],
                   [1.1, 1.2], 1.8)
    v1 = quadrature(base).value
    v2 = quadrature(scaled).value
    assert abs(v2 - v1 * lam ** -1.8) / abs(v2) < 1e-8


def test_torus_covariance():
    """Rescaling z_i by t_i maps c_a -> c_a t^a and the value by t^-alpha."""
    exponents = [(1, 0), (0, 1), (1, 1), (0, 2)]
    coeffs = [1.0, 1.0, 1.5, 1.0]
    alpha = [1.2, 1.3]
    beta = 1.9
    t = (1.4, 0.8)
    twisted = [c * t[0] ** e[0] * t[1] ** e[1]
               for c, e in zip(coeffs, exponents)]
    v1 = quadrature(_spec(exponents, coeffs, alpha, beta)).value
    v2 = quadrature(_spec(exponents, twisted, alpha, beta)).value
    expected = v1 * t[0] ** -alpha[0] * t[1] ** -alpha[1]
    assert abs(v2 - expected) / abs(v2) < 1e-8


def test_divergent_outside_newton_polytope():
    # alpha/beta below the lower facet: the z -> 0 corner diverges
    spec = _spec([(1, 0), (0, 1), (1, 1), (0, 2)], [1.0, 1.0, 1.5, 1.0],
                 [0.3, 0.4], 1.9)
    assert convergence_margin(spec) < 0
    with pytest.raises(NonConvergent):
        quadrature(spec)


def test_divergent_at_large_z():
    # alpha above the top facet: the z -> infinity direction diverges
    spec = _spec([(1, 0), (0, 1), (1, 1)], [1.0, 1.0, 1.0], [1.9, 1.9], 1.9)
    with pytest.raises(NonConvergent):
        quadrature(spec)


def test_convergence_margin_interior():
    spec = _spec([(1, 0), (0, 1), (1, 1)], [1.0, 1.0, 1.0], [1.2, 1.3], 1.9)
    assert convergence_margin(spec) > 0.1


def test_qmc_matches_tensor_in_low_dimension():
    spec = _spec([(1, 0), (0, 1), (1, 1)], [1.0, 1.0, 1.0], [1.3, 1.2], 1.9,
                 tol=1e-6)
    tensor = quadrature(spec).value
    sobol = qmc_sobol(spec, log2_points=16).value
    assert abs(tensor - sobol) / abs(tensor) < 1e-3


def test_dimension_limit():
    exponents = [tuple(int(i == j) for j in range(5)) for i in range(5)]
    spec = _spec(exponents, [1.0] * 5, [0.2] * 5, 1.5)
    with pytest.raises(DimensionMismatch):
        quadrature(spec)
