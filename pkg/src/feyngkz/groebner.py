"""Buchberger's algorithm over exact rationals.

Polynomials are dicts mapping exponent tuples to Fractions.  Term orders are
key functions on monomials (bigger key = bigger monomial): graded reverse
lexicographic, a weight order refined by grevlex, and grevlex with a chosen
cheapest variable (the order used for saturation of homogeneous ideals).

Pair selection uses the sugar strategy; Buchberger's coprime-lcm criterion
prunes pairs.  Everything in this package feeds the algorithm binomial,
homogeneous ideals, but the implementation is generic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

Mono = Tuple[int, ...]
Poly = Dict[Mono, Fraction]
OrderKey = Callable[[Mono], tuple]


# -- term orders -----------------------------------------------------------

def grevlex_key(mono: Mono) -> tuple:
    return (sum(mono), tuple(-mono[i] for i in range(len(mono) - 1, -1, -1)))


def weighted_key(weight: Sequence[int]) -> OrderKey:
    """weight order, ties broken by grevlex."""
    weight = tuple(weight)

    def key(mono: Mono) -> tuple:
        return (sum(w * m for w, m in zip(weight, mono)),) + grevlex_key(mono)
    return key


def cheapest_variable_key(index: int, nvars: int) -> OrderKey:
    """grevlex with the given variable moved to the cheapest slot."""
    perm = [j for j in range(nvars) if j != index] + [index]

    def key(mono: Mono) -> tuple:
        return grevlex_key(tuple(mono[j] for j in perm))
    return key


# -- basic polynomial ops --------------------------------------------------

def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))

def mono_div(a: Mono, b: Mono) -> Mono:
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def poly_add(f: Poly, g: Poly) -> Poly:
    out = dict(f)
    for m, c in g.items():
        c2 = out.get(m, Fraction(0)) + c
        if c2:
            out[m] = c2
        else:
            out.pop(m, None)
    return out


def poly_scale_shift(f: Poly, coeff: Fraction, shift: Mono) -> Poly:
    return {mono_mul(m, shift): c * coeff for m, c in f.items()}


def leading_monomial(f: Poly, key: OrderKey) -> Mono:
    return max(f, key=key)


def normal_form(f: Poly, basis: List[Poly], key: OrderKey) -> Poly:
    """Remainder of f under multivariate division by basis."""
    work = dict(f)
    remainder: Poly = {}
    lms = [leading_monomial(g, key) for g in basis]
    while work:
        m = leading_monomial(work, key)
        c = work[m]
        for g, lm in zip(basis, lms):
            if mono_divides(lm, m):
                factor = c / g[lm]
                work = poly_add(work, poly_scale_shift(g, -factor,
                                                       mono_div(m, lm)))
                break
        else:
            remainder[m] = c
            del work[m]
    return remainder


def s_polynomial(f: Poly, g: Poly, key: OrderKey) -> Poly:
    lf, lg = leading_monomial(f, key), leading_monomial(g, key)
    lcm = mono_lcm(lf, lg)
    sf = poly_scale_shift(f, Fraction(1) / f[lf], mono_div(lcm, lf))
    sg = poly_scale_shift(g, Fraction(1) / g[lg], mono_div(lcm, lg))
    return poly_add(sf, {m: -c for m, c in sg.items()})


# -- Buchberger ------------------------------------------------------------

def _sugar(f: Poly) -> int:
    return max(sum(m) for m in f)


def buchberger(generators: Sequence[Poly], key: OrderKey) -> List[Poly]:
    basis = [dict(g) for g in generators if g]
    if not basis:
        return []
    sugars = [_sugar(g) for g in basis]

    def pair_data(i: int, j: int):
        li = leading_monomial(basis[i], key)
        lj = leading_monomial(basis[j], key)
        lcm = mono_lcm(li, lj)
        sugar = max(sugars[i] + sum(mono_div(lcm, li)),
                    sugars[j] + sum(mono_div(lcm, lj)))
        coprime = mono_mul(li, lj) == lcm
        return (sugar, key(lcm)), lcm, coprime

    pairs = {}
    for i in range(len(basis)):
        for j in range(i):
            rank, _, coprime = pair_data(j, i)
            if not coprime:
                pairs[(j, i)] = rank

    while pairs:
        (i, j) = min(pairs, key=lambda p: pairs[p])
        rank = pairs.pop((i, j))
        rem = normal_form(s_polynomial(basis[i], basis[j], key), basis, key)
        if not rem:
            continue
        basis.append(rem)
        sugars.append(max(rank[0], _sugar(rem)))
        k = len(basis) - 1
        for i2 in range(k):
            rank2, _, coprime = pair_data(i2, k)
            if not coprime:
                pairs[(i2, k)] = rank2
    return interreduce(basis, key)


def interreduce(basis: Sequence[Poly], key: OrderKey) -> List[Poly]:
    """Reduced Groebner basis: minimal, monic, fully tail-reduced."""
    basis = [dict(g) for g in basis if g]
    # minimalize by leading monomials
    keep: List[Poly] = []
    lms = [leading_monomial(g, key) for g in basis]
    for i, g in enumerate(basis):
        if any(j != i and mono_divides(lms[j], lms[i])
               and (lms[j] != lms[i] or j < i) for j in range(len(basis))):
            continue
        keep.append(g)
    reduced: List[Poly] = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        rem = normal_form(g, others, key) if others else dict(g)
        if rem:
            lc = rem[leading_monomial(rem, key)]
            reduced.append({m: c / lc for m, c in rem.items()})
    reduced.sort(key=lambda g: key(leading_monomial(g, key)))
    return reduced


# -- saturation ------------------------------------------------------------

def saturate_variable(generators: Sequence[Poly], index: int,
                      nvars: int) -> List[Poly]:
    """(I : x_index^inf) for a homogeneous ideal I.

    With the chosen variable cheapest in grevlex, dividing every element of a
    Groebner basis by its largest x_index power generates the saturation.
    """
    key = cheapest_variable_key(index, nvars)
    basis = buchberger(generators, key)
    out = []
    for g in basis:
        drop = min(m[index] for m in g)
        if drop:
            g = {tuple(e - drop if k == index else e
                       for k, e in enumerate(m)): c for m, c in g.items()}
        out.append(g)
    return out


def saturate_all_variables(generators: Sequence[Poly],
                           nvars: int) -> List[Poly]:
    gens = [dict(g) for g in generators]
    for index in range(nvars):
        gens = saturate_variable(gens, index, nvars)
    return gens
