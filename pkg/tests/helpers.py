"""Independent reference implementations used as test oracles.

Everything here is deliberately written from first principles (plain term
recurrences, brute-force enumeration) so it shares no code with the package
machinery it checks.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def rising(a: float, m: int) -> float:
    """Rising factorial by direct multiplication (m may be negative)."""
    if m >= 0:
        out = 1.0
        for k in range(m):
            out *= a + k
        return out
    out = 1.0
    for k in range(-m):
        out *= a - 1 - k
    if out == 0.0:
        raise ZeroDivisionError("pole in rising factorial")
    return 1.0 / out


def pfq(upper, lower, x: float, terms: int = 200) -> float:
    """Sum pFq(upper; lower; x) by the plain term recurrence."""
    total = 1.0
    term = 1.0
    for n in range(terms):
        ratio = 1.0
        for a in upper:
            ratio *= a + n
        for b in lower:
            ratio /= b + n
        term *= ratio * x / (n + 1)
        total += term
    return total


def appell_f4(a: float, b: float, c1: float, c2: float,
              x: float, y: float, terms: int = 60) -> float:
    """Sum Appell F4 by a double loop over its defining series, updating
    each term incrementally to avoid factorial overflow."""
    total = 0.0
    row = 1.0                      # term at (m, 0)
    for m in range(terms):
        term = row
        for n in range(terms):
            total += term
            term *= ((a + m + n) * (b + m + n) / (c2 + n)) * y / (n + 1)
        row *= ((a + m) * (b + m) / (c1 + m)) * x / (m + 1)
    return total


def gauss_2f1(a: float, b: float, c: float, x: float,
              terms: int = 400) -> float:
    return pfq([a, b], [c], x, terms)


def form_value(form, assignment, kinconst, terms: int = 200) -> float:
    """Evaluate a classified HypergeometricForm numerically from its stated
    parameters alone (independent of the series-enumeration machinery).

    ``kinconst`` maps coefficient names c1.. to floats.
    """
    upper = [p.evaluate(assignment) for p in form.upper]
    lower = [p.evaluate(assignment) for p in form.lower]
    args = [_eval_monomial(arg, kinconst) * sign
            for arg, sign in zip(form.arguments, form.argument_signs)]
    if form.kind == "AppellF4":
        return appell_f4(upper[0], upper[1], lower[0], lower[1],
                         args[0], args[1], min(terms, 120))
    if len(form.kind) == 3 and form.kind[1] == "F":
        # the n! slot was already stripped from the lower list
        return pfq(upper, lower, args[0], terms)
    raise ValueError(f"unknown form kind {form.kind}")


def _eval_monomial(expr: str, values) -> float:
    """Evaluate a 'c2*c3/(c1*c4)' style monomial string."""
    num, _, den = expr.partition("/")
    out = 1.0
    for name in num.strip("()").split("*"):
        if name:
            out *= values[name]
    if den:
        for name in den.strip("()").split("*"):
            if name:
                out /= values[name]
    return out


def brute_force_standard_monomials(gens, nvars: int, degree: int):
    """All monomials up to ``degree`` per variable that avoid the monomial
    ideal generated by ``gens`` (direct divisibility scan)."""
    out = []
    for mono in itertools.product(range(degree + 1), repeat=nvars):
        if not any(all(m >= g for m, g in zip(mono, gen)) for gen in gens):
            out.append(mono)
    return out


def pair_monomials(pairs, nvars: int, degree: int):
    """Monomials up to ``degree`` per variable covered by a standard-pair
    list (union over pairs of root + face shifts)."""
    covered = set()
    for pair in pairs:
        free = sorted(pair.face)
        for shift in itertools.product(range(degree + 1), repeat=len(free)):
            mono = list(pair.root)
            ok = True
            for axis, extra in zip(free, shift):
                mono[axis] += extra
                if mono[axis] > degree:
                    ok = False
                    break
            if ok:
                covered.add(tuple(mono))
    return covered


def random_monomial_ideal(rng, nvars: int, ngens: int, maxdeg: int):
    gens = []
    for _ in range(ngens):
        gens.append(tuple(rng.randrange(maxdeg + 1) for _ in range(nvars)))
    return [g for g in gens if any(g)]
