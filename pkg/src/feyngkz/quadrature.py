"""Direct numeric evaluation of  I = int_{R_+^N} z^alpha g(z)^-beta dz/z.

The exponential chart z = e^x turns the integrand into a smooth function on
R^N that decays exponentially in every direction whenever alpha/beta lies in
the interior of the Newton polytope of g.  A sinh substitution per axis makes
the decay doubly exponential, so the trapezoid rule converges geometrically;
for N <= 3 a tensor product of such rules is used, for N = 4 a scrambled
Sobol rule on the sinh-transformed box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog
from scipy.special import logsumexp
from scipy.stats import qmc

from .errors import DimensionMismatch, NonConvergent

_DECAY_DROP = 45.0          # required drop of log f along each axis
_PROBE_LIMIT = 2000.0       # how far out to look for the drop


@dataclass
class QuadratureSpec:
    exponents: List[Tuple[int, ...]]
    coefficients: List[float]
    alpha: List[float]
    beta: float
    target_tolerance: float = 1e-8

    def __post_init__(self):
        self.ndim = len(self.alpha)
        if any(len(e) != self.ndim for e in self.exponents):
            raise DimensionMismatch("exponent/alpha dimension mismatch")
        if len(self.exponents) != len(self.coefficients):
            raise DimensionMismatch("one coefficient per exponent required")
        if any(c <= 0 for c in self.coefficients):
            raise ValueError("coefficients must be positive")


@dataclass
class QuadratureResult:
    value: float
    error: float
    method: str
    nodes: int

    def to_dict(self) -> dict:
        return {"value": self.value, "error": self.error,
                "method": self.method, "nodes": self.nodes}


def _log_integrand(spec: QuadratureSpec, points: np.ndarray) -> np.ndarray:
    """log f at an (..., N) array of chart points x (z = e^x)."""
    expmat = np.asarray(spec.exponents, dtype=float)
    logc = np.log(np.asarray(spec.coefficients, dtype=float))
    alpha = np.asarray(spec.alpha, dtype=float)
    logg = logsumexp(points @ expmat.T + logc, axis=-1)
    return points @ alpha - spec.beta * logg


def convergence_margin(spec: QuadratureSpec) -> float:
    """Largest delta such that alpha/beta = sum_t lambda_t a_t with all
    lambda_t >= delta; positive exactly when alpha/beta lies in the interior
    of the Newton polytope of g, i.e. when the integral converges."""
    expmat = np.asarray(spec.exponents, dtype=float)
    nterms = expmat.shape[0]
    # variables: (lambda_1..lambda_T, delta); maximize delta
    cost = np.zeros(nterms + 1)
    cost[-1] = -1.0
    a_eq = np.zeros((spec.ndim + 1, nterms + 1))
    a_eq[:spec.ndim, :nterms] = expmat.T
    a_eq[spec.ndim, :nterms] = 1.0
    b_eq = np.append(np.asarray(spec.alpha, dtype=float) / spec.beta, 1.0)
    a_ub = np.hstack([-np.eye(nterms), np.ones((nterms, 1))])
    result = linprog(cost, A_ub=a_ub, b_ub=np.zeros(nterms),
                     A_eq=a_eq, b_eq=b_eq,
                     bounds=[(None, None)] * (nterms + 1))
    if not result.success:
        return -1.0
    return float(result.x[-1])


def _check_convergent(spec: QuadratureSpec):
    margin = convergence_margin(spec)
    if margin <= 1e-9:
        raise NonConvergent(
            "alpha/beta lies outside the interior of the Newton polytope "
            f"of g (margin {margin:.3g}); the integral diverges")


def _axis_truncations(spec: QuadratureSpec) -> List[float]:
    """Radius per axis at which log f has dropped _DECAY_DROP below log f(0);
    raises NonConvergent when the integrand fails to decay."""
    _check_convergent(spec)
    log_f0 = float(_log_integrand(spec, np.zeros((1, spec.ndim)))[0])
    radii = []
    for axis in range(spec.ndim):
        worst = 0.0
        for direction in (+1.0, -1.0):
            r = 1.0
            previous = log_f0
            while True:
                point = np.zeros((1, spec.ndim))
                point[0, axis] = direction * r
                value = float(_log_integrand(spec, point)[0])
                if value <= log_f0 - _DECAY_DROP:
                    break
                if r >= _PROBE_LIMIT:
                    raise NonConvergent(
                        f"integrand does not decay along axis {axis + 1} "
                        f"(direction {direction:+.0f})")
                if value > previous + 1e-12 and r > 32:
                    raise NonConvergent(
                        f"integrand grows along axis {axis + 1}")
                previous = value
                r *= 1.5
            worst = max(worst, r)
        radii.append(worst)
    return radii


def _de_axis(vmax: float, step: float):
    u = np.arange(-vmax, vmax + 0.5 * step, step)
    return np.sinh(u), step * np.cosh(u)


def _tensor_pass(spec: QuadratureSpec, vmaxes: Sequence[float],
                 step: float) -> Tuple[float, int]:
    axes = [_de_axis(v, step) for v in vmaxes]
    nodes = [len(x) for x, _ in axes]
    total = 0.0
    if spec.ndim == 1:
        x, w = axes[0]
        total = float(np.sum(np.exp(_log_integrand(spec, x[:, None])) * w))
        return total, nodes[0]
    rest = np.meshgrid(*[x for x, _ in axes[1:]], indexing="ij")
    rest_w = np.ones_like(rest[0])
    for wg in np.meshgrid(*[w for _, w in axes[1:]], indexing="ij"):
        rest_w = rest_w * wg
    x0, w0 = axes[0]
    for xv, wv in zip(x0, w0):
        stack = np.stack([np.full_like(rest[0], xv)] + list(rest), axis=-1)
        values = np.exp(_log_integrand(spec, stack))
        total += wv * float(np.sum(values * rest_w))
    return total, int(np.prod(nodes))


def tanh_sinh_tensor(spec: QuadratureSpec) -> QuadratureResult:
    """Tensor-product double-exponential rule for N <= 3."""
    radii = _axis_truncations(spec)
    vmaxes = [math.asinh(r) + 0.4 for r in radii]
    step = 0.2
    value, nodes = _tensor_pass(spec, vmaxes, step)
    while True:
        step /= 2.0
        refined, nodes = _tensor_pass(spec, vmaxes, step)
        error = abs(refined - value)
        value = refined
        if error <= spec.target_tolerance * max(abs(refined), 1e-300):
            break
        if step < 0.02:
            break
    return QuadratureResult(value, error, "tanh-sinh-tensor", nodes)


def qmc_sobol(spec: QuadratureSpec, log2_points: int = 18,
              replicates: int = 8, seed: int = 20240) -> QuadratureResult:
    """Scrambled Sobol rule on the sinh-transformed box (used for N = 4)."""
    radii = _axis_truncations(spec)
    vmaxes = np.array([math.asinh(r) + 0.4 for r in radii])
    estimates = []
    for rep in range(replicates):
        sampler = qmc.Sobol(d=spec.ndim, scramble=True, seed=seed + rep)
        u = sampler.random_base2(m=log2_points)
        v = (2.0 * u - 1.0) * vmaxes
        x = np.sinh(v)
        logw = np.sum(np.log(2.0 * vmaxes) + np.log(np.cosh(v)), axis=1)
        values = np.exp(_log_integrand(spec, x) + logw)
        estimates.append(float(np.mean(values)))
    value = float(np.mean(estimates))
    spread = float(np.std(estimates, ddof=1)) / math.sqrt(replicates)
    return QuadratureResult(value, 2.0 * spread, "qmc-sobol",
                            replicates * 2 ** log2_points)


def quadrature(spec: QuadratureSpec) -> QuadratureResult:
    if spec.ndim <= 3:
        return tanh_sinh_tensor(spec)
    if spec.ndim == 4:
        result = qmc_sobol(spec)
        if result.error > spec.target_tolerance * abs(result.value):
            result = qmc_sobol(spec, log2_points=20)
        return result
    raise DimensionMismatch("quadrature oracle supports up to 4 variables")
