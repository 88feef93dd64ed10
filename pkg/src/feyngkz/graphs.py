"""Lee-Pomeransky data from a momentum-space graph description.

A graph is given propagator-by-propagator: D_i = k.M_i.k + 2 Q_i.(k|p) + J_i
with M_i an L x L bilinear form in the loop momenta, Q_i an L x E coupling to
the external momenta and J_i a kinematic scalar.  From the z-weighted sums
M, Q, J the two Symanzik polynomials are

    U = det(M),      F = det(M) * J - adj(M)^{rr'} Q^r . Q^{r'}

and the integrand polynomial is g = U + F.  Scalar products p_s.p_t are
expanded over a user-supplied table of invariant symbols.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping

from .errors import DimensionMismatch, SingularM
from .gammafn import GammaFactor
from .kpoly import (Coeff, KPoly, adjugate, coeff_const, coeff_from, det)
from .params import ParamLinear


@dataclass
class Propagator:
    M: List[List[Fraction]]          # L x L, symmetric
    Q: List[List[Fraction]]          # L x E
    J: Coeff                         # kinematic scalar


@dataclass
class GraphSpec:
    L: int
    E: int
    propagators: List[Propagator]
    invariants: List[str]
    # p_s . p_t expansions, symmetric E x E table of invariant combinations
    momentum_products: List[List[Coeff]] = field(default_factory=list)

    def __post_init__(self):
        for prop in self.propagators:
            if len(prop.M) != self.L or any(len(r) != self.L for r in prop.M):
                raise DimensionMismatch("M block must be L x L")
            if len(prop.Q) != self.L or any(len(r) != self.E for r in prop.Q):
                raise DimensionMismatch("Q block must be L x E")
        if not self.momentum_products:
            self.momentum_products = [[{} for _ in range(self.E)]
                                      for _ in range(self.E)]

    @property
    def n(self) -> int:
        return len(self.propagators)

    @classmethod
    def from_dict(cls, data: Mapping) -> "GraphSpec":
        props = [Propagator(
            M=[[Fraction(x) for x in row] for row in p["M"]],
            Q=[[Fraction(x) for x in row] for row in p.get("Q", [[]] * data["L"])],
            J=coeff_from(p.get("J", {})),
        ) for p in data["propagators"]]
        E = data["E"]
        mp = [[{} for _ in range(E)] for _ in range(E)]
        for key, expr in data.get("momentum_products", {}).items():
            s_name, t_name = key.split(".")
            s, t = int(s_name.lstrip("p")) - 1, int(t_name.lstrip("p")) - 1
            mp[s][t] = coeff_from(expr)
            mp[t][s] = coeff_from(expr)
        return cls(L=data["L"], E=E, propagators=props,
                   invariants=list(data.get("invariants", [])),
                   momentum_products=mp)

    @classmethod
    def from_json(cls, text: str) -> "GraphSpec":
        return cls.from_dict(json.loads(text))


def assemble_mqj(spec: GraphSpec):
    """z-weighted sums (M, Q, J) as polynomial matrices in z1..zn."""
    n = spec.n
    M = [[KPoly.zero(n) for _ in range(spec.L)] for _ in range(spec.L)]
    Q = [[KPoly.zero(n) for _ in range(spec.E)] for _ in range(spec.L)]
    J = KPoly.zero(n)
    for i, prop in enumerate(spec.propagators):
        zi = KPoly.variable(n, i)
        for r in range(spec.L):
            for c in range(spec.L):
                if prop.M[r][c]:
                    M[r][c] = M[r][c] + zi.scale(coeff_const(prop.M[r][c]))
            for s in range(spec.E):
                if prop.Q[r][s]:
                    Q[r][s] = Q[r][s] + zi.scale(coeff_const(prop.Q[r][s]))
        if prop.J:
            J = J + zi.scale(prop.J)
    return M, Q, J


def symanzik(spec: GraphSpec):
    """Return (U, F, g) with g = U + F."""
    M, Q, J = assemble_mqj(spec)
    U = det(M)
    if U.is_zero():
        raise SingularM("det(M) vanishes identically")
    adj = adjugate(M)
    quad = KPoly.zero(spec.n)
    for r in range(spec.L):
        for rp in range(spec.L):
            if adj[r][rp].is_zero():
                continue
            # Q^r . Q^{r'} expanded over the momentum-product table
            dot = KPoly.zero(spec.n)
            for s in range(spec.E):
                for t in range(spec.E):
                    prod = spec.momentum_products[s][t]
                    if not prod:
                        continue
                    dot = dot + (Q[r][s] * Q[rp][t]).scale(prod)
            quad = quad + adj[r][rp] * dot
    F = U * J - quad
    return U, F, U + F


def prefactor(L: int, nprop: int) -> GammaFactor:
    """Gamma(d/2) / [Gamma((L+1)d/2 - sum(alpha)) * prod Gamma(alpha_i)]
    written with beta = d/2."""
    beta = ParamLinear.param("beta")
    alphas = [ParamLinear.param(f"a{i + 1}") for i in range(nprop)]
    total = ParamLinear()
    for a in alphas:
        total = total + a
    return GammaFactor(numerator=[beta],
                       denominator=[beta * (L + 1) - total] + alphas)
