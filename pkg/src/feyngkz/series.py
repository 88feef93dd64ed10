"""Canonical series solutions attached to exponent vectors.

For an exponent vector gamma and kernel lattice L of A, the log-free series

    phi = c^gamma * sum_{u in L} [gamma]_{u-} / [gamma + u]_{u+} * c^u

has falling-factorial numerators over the negative support of u and rising
ones in the denominator over the positive support.  Terms with w.u < 0 are
dropped: the weight that selected the initial ideal also selects the support
half-space, and the remaining coefficients vanish exactly where the falling
factorials hit nonpositive integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import DivergentArgument
from .gkz import FakeExponent
from .params import ParamLinear
from .pochhammer import PochhammerProduct


def term_coefficient(gamma: Sequence[ParamLinear], u: Sequence[int],
                     weight: Sequence[int]) -> PochhammerProduct:
    """[gamma]_{u-} / [gamma+u]_{u+}, or exact zero off the support."""
    if sum(w * x for w, x in zip(weight, u)) < 0:
        return PochhammerProduct.zero()
    coeff = PochhammerProduct.one()
    for g, x in zip(gamma, u):
        if x < 0:
            coeff = coeff * PochhammerProduct.falling(g, -x)
        elif x > 0:
            coeff = coeff * PochhammerProduct.make(
                1, [], [(g + ParamLinear.const(1), x)])
        if coeff.is_zero():
            return coeff
    return coeff


@dataclass
class SeriesTerm:
    shift: Tuple[int, ...]            # lattice point u
    indices: Tuple[int, ...]          # coordinates in the lattice basis
    coefficient: PochhammerProduct


@dataclass
class HypergeometricForm:
    kind: str                          # "2F1", "3F2", "AppellF4", "RawSeries"
    upper: List[ParamLinear] = field(default_factory=list)
    lower: List[ParamLinear] = field(default_factory=list)
    arguments: List[str] = field(default_factory=list)
    argument_signs: List[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "upper": [str(p) for p in self.upper],
            "lower": [str(p) for p in self.lower],
            "argument": self.arguments[0] if len(self.arguments) == 1
            else self.arguments,
            "argument_signs": self.argument_signs,
        }


def _argument_monomial(u: Sequence[int]) -> str:
    num = "*".join(f"c{i + 1}" + (f"^{x}" if x > 1 else "")
                   for i, x in enumerate(u) if x > 0) or "1"
    den = "*".join(f"c{i + 1}" + (f"^{-x}" if x < -1 else "")
                   for i, x in enumerate(u) if x < 0)
    return f"{num}/({den})" if den else num


class CanonicalSeries:
    """One canonical series: exponent vector + oriented lattice + weight."""

    def __init__(self, gamma: FakeExponent, lattice: Sequence[Sequence[int]],
                 weight: Sequence[int]):
        self.gamma = gamma
        self.weight = tuple(weight)
        self.lattice = [self._orient(tuple(v)) for v in lattice]
        self.nvars = len(gamma.components)
        self._f4: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
        if self.rank == 2:
            form = self._classify_f4()
            if form is not None:
                # prefer the Appell-shaped basis for enumeration and display
                self.lattice = list(self._f4)

    def _orient(self, vector: Tuple[int, ...]) -> Tuple[int, ...]:
        wdot = sum(w * x for w, x in zip(self.weight, vector))
        return tuple(-x for x in vector) if wdot < 0 else vector

    @property
    def rank(self) -> int:
        return len(self.lattice)

    # -- term enumeration --------------------------------------------------

    def enumerate_terms(self, order: int) -> List[SeriesTerm]:
        """All nonzero terms with lattice coordinates in [-order, order],
        sorted by max-norm shell."""
        terms = []
        for indices in itertools.product(range(-order, order + 1),
                                         repeat=self.rank):
            u = tuple(sum(k * v[i] for k, v in zip(indices, self.lattice))
                      for i in range(self.nvars))
            coeff = term_coefficient(self.gamma.components, u, self.weight)
            if coeff.is_zero():
                continue
            terms.append(SeriesTerm(u, indices, coeff))
        terms.sort(key=lambda t: (max((abs(k) for k in t.indices), default=0),
                                  t.indices))
        return terms

    # -- classification ----------------------------------------------------

    def classify(self) -> HypergeometricForm:
        if self.rank == 1:
            return self._classify_rank1()
        if self.rank == 2:
            form = self._classify_f4()
            if form is not None:
                return form
        return HypergeometricForm(kind="RawSeries")

    def _classify_rank1(self) -> HypergeometricForm:
        gen = self.lattice[0]
        if any(abs(x) > 1 for x in gen):
            return HypergeometricForm(kind="RawSeries")
        gamma = self.gamma.components
        upper = [-gamma[i] for i, x in enumerate(gen) if x < 0]
        lower = [gamma[i] + ParamLinear.const(1)
                 for i, x in enumerate(gen) if x > 0]
        one = ParamLinear.const(1)
        if one not in lower:
            return HypergeometricForm(kind="RawSeries")
        lower.remove(one)  # the (1)_n slot is the factorial
        sign = -1 if sum(1 for x in gen if x < 0) % 2 else 1
        return HypergeometricForm(
            kind=f"{len(upper)}F{len(lower)}", upper=upper, lower=lower,
            arguments=[_argument_monomial(gen)], argument_signs=[sign])

    def _classify_f4(self) -> Optional[HypergeometricForm]:
        gamma = self.gamma.components
        one = ParamLinear.const(1)
        for v1, v2 in self._f4_candidates():
            shared = [i for i, x in enumerate(v1) if x < 0]
            lower = []
            for v in (v1, v2):
                params = [gamma[i] + one for i, x in enumerate(v) if x > 0]
                if one not in params:
                    break
                params.remove(one)
                lower.append(params[0])
            if len(lower) != 2:
                continue
            self._f4 = (v1, v2)
            return HypergeometricForm(
                kind="AppellF4", upper=[-gamma[i] for i in shared],
                lower=lower,
                arguments=[_argument_monomial(v1), _argument_monomial(v2)],
                argument_signs=[1, 1])
        return None

    def _f4_candidates(self):
        """Small unimodular basis changes with the Appell F4 shape: two
        generators sharing a 2-element negative support, disjoint 2-element
        positive supports, all entries in {-1, 0, 1}."""
        l1, l2 = self.lattice

        def shaped(v):
            return (all(abs(x) <= 1 for x in v)
                    and sum(1 for x in v if x < 0) == 2
                    and sum(1 for x in v if x > 0) == 2)

        candidates = []
        for p, q in itertools.product(range(-2, 3), repeat=2):
            v = tuple(p * a + q * b for a, b in zip(l1, l2))
            if any(v) and shaped(v):
                candidates.append(((p, q), v))
        for (pq1, v1), (pq2, v2) in itertools.permutations(candidates, 2):
            if abs(pq1[0] * pq2[1] - pq1[1] * pq2[0]) != 1:
                continue
            neg1 = {i for i, x in enumerate(v1) if x < 0}
            neg2 = {i for i, x in enumerate(v2) if x < 0}
            pos1 = {i for i, x in enumerate(v1) if x > 0}
            pos2 = {i for i, x in enumerate(v2) if x > 0}
            if neg1 == neg2 and not pos1 & pos2:
                yield v1, v2

    # -- numeric evaluation ------------------------------------------------

    def argument_values(self, coeffs: Sequence[float]) -> List[float]:
        values = []
        for v in self.lattice:
            x = 1.0
            for c, e in zip(coeffs, v):
                x *= c ** e
            values.append(x)
        return values

    def evaluate(self, assignment: Mapping[str, float],
                 coeffs: Sequence[float], order: int) -> Tuple[float, float]:
        """(value, tail_estimate) of the truncated series at positive
        coefficients; raises DivergentArgument outside the convergence
        region implied by the lattice arguments."""
        args = self.argument_values(coeffs)
        if self.rank == 1:
            if abs(args[0]) >= 1:
                raise DivergentArgument(f"|argument| = {abs(args[0]):.4g} >= 1")
        elif self._f4 is not None:
            x, y = args
            if math.sqrt(abs(x)) + math.sqrt(abs(y)) >= 1:
                raise DivergentArgument("sqrt|x| + sqrt|y| >= 1")
        gamma_num = [g.evaluate(assignment) for g in self.gamma.components]
        prefactor = 1.0
        for c, g in zip(coeffs, gamma_num):
            prefactor *= c ** g
        total = 0.0
        tail = 0.0
        for term in self.enumerate_terms(order):
            value = term.coefficient.evaluate(assignment)
            for c, e in zip(coeffs, term.shift):
                value *= c ** e
            total += value
            if max((abs(k) for k in term.indices), default=0) == order:
                tail += abs(value)
        return prefactor * total, prefactor * tail
