"""Symbolic Pochhammer products and their stable numeric evaluation.

The rising factorial (a)_m = a(a+1)...(a+m-1) is the basic building block of
every series coefficient in this package.  Falling factorials are folded into
rising ones via

    g(g-1)...(g-m+1) = (-1)^m * (-g)_m,

and negative lengths via (a)_{-m} = (-1)^m / (1-a)_m = 1 / (a-m)_m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Mapping, Tuple

from .errors import PoleError
from .gammafn import as_nonpositive_int, log_gamma_signed
from .params import ParamLinear

Factor = Tuple[ParamLinear, int]


def poch_numeric(a: float, m: int) -> float:
    """(a)_m for integer m of either sign."""
    if m == 0:
        return 1.0
    if m < 0:
        denom = poch_numeric(a + m, -m)
        if denom == 0.0:
            raise PoleError(f"({a})_{m} hits a pole")
        return 1.0 / denom
    k = as_nonpositive_int(a)
    if k is not None:
        # base on a nonpositive integer: the product terminates or vanishes
        if m >= 1 - k:
            return 0.0
        value = 1.0
        for j in range(m):
            value *= k + j
        return value
    lg_top, s_top = log_gamma_signed(a + m)
    lg_bot, s_bot = log_gamma_signed(a)
    return s_top * s_bot * math.exp(lg_top - lg_bot)


def _factor_is_zero(base: ParamLinear, length: int) -> bool:
    """Symbolic test: (base)_length == 0 identically."""
    if length <= 0 or not base.is_constant():
        return False
    c = base.constant
    return c.denominator == 1 and 1 - length <= c <= 0


def _canonical(factors: List[Factor]) -> Tuple[Factor, ...]:
    merged: dict = {}
    for base, length in factors:
        if length == 0:
            continue
        merged[(base, length)] = merged.get((base, length), 0) + 1
    out: List[Factor] = []
    for (base, length), count in merged.items():
        out.extend([(base, length)] * count)
    out.sort(key=lambda f: (str(f[0]), f[1]))
    return tuple(out)


@dataclass(frozen=True)
class PochhammerProduct:
    """sign * prod (num_i)_{m_i} / prod (den_j)_{k_j}, or exact zero (sign 0)."""

    sign: int = 1
    numerator: Tuple[Factor, ...] = ()
    denominator: Tuple[Factor, ...] = ()

    @classmethod
    def make(cls, sign: int, numerator: List[Factor],
             denominator: List[Factor]) -> "PochhammerProduct":
        for base, length in denominator:
            if _factor_is_zero(base, length):
                raise PoleError(f"vanishing denominator factor ({base})_{length}")
        if sign == 0 or any(_factor_is_zero(b, m) for b, m in numerator):
            return cls(0, (), ())
        return cls(sign, _canonical(numerator), _canonical(denominator))

    @classmethod
    def one(cls) -> "PochhammerProduct":
        return cls(1, (), ())

    @classmethod
    def zero(cls) -> "PochhammerProduct":
        return cls(0, (), ())

    @classmethod
    def rising(cls, base: ParamLinear, length: int) -> "PochhammerProduct":
        """(base)_length with length of either sign."""
        if length >= 0:
            return cls.make(1, [(base, length)], [])
        # (base)_{-m} = (-1)^m / (1 - base)_m
        m = -length
        return cls.make((-1) ** m, [], [(ParamLinear.const(1) - base, m)])

    @classmethod
    def falling(cls, base: ParamLinear, length: int) -> "PochhammerProduct":
        """base*(base-1)*...*(base-length+1), length >= 0."""
        if length < 0:
            raise ValueError("falling factorial needs length >= 0")
        return cls.make((-1) ** length, [(-base, length)], [])

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "PochhammerProduct") -> "PochhammerProduct":
        if self.sign == 0 or other.sign == 0:
            return PochhammerProduct.zero()
        return PochhammerProduct.make(
            self.sign * other.sign,
            list(self.numerator) + list(other.numerator),
            list(self.denominator) + list(other.denominator))

    def evaluate(self, assignment: Mapping[str, float]) -> float:
        if self.sign == 0:
            return 0.0
        value = float(self.sign)
        for base, length in self.numerator:
            value *= poch_numeric(base.evaluate(assignment), length)
        for base, length in self.denominator:
            d = poch_numeric(base.evaluate(assignment), length)
            if d == 0.0:
                raise PoleError(f"({base})_{length} vanishes numerically")
            value /= d
        return value

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        num = "*".join(f"poch({b}, {m})" for b, m in self.numerator) or "1"
        den = "*".join(f"poch({b}, {m})" for b, m in self.denominator)
        text = num if not den else f"{num}/({den})"
        return text if self.sign > 0 else f"-{text}"
