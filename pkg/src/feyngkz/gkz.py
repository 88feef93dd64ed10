"""From a polynomial to the combinatorial core of its A-hypergeometric system.

The chain implemented here: configuration matrix A of the monomial support,
codimension, deformation of codimension-zero inputs, the integer kernel
lattice of A, the toric ideal I_A (lattice-basis ideal saturated at every
variable), its w-initial monomial ideal, the standard pairs of that ideal and
finally the exponent vectors obtained by solving A.theta = kappa on each
standard pair.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (DeformationFailed, InconsistentPair, NonGenericWeight,
                     UnderdeterminedPair)
from .groebner import (Poly, buchberger, grevlex_key, interreduce,
                       leading_monomial, mono_divides, saturate_all_variables,
                       weighted_key)
from .intlinalg import integer_rank, kernel_basis
from .kpoly import KPoly, coeff_const
from .params import ParamLinear

Mono = Tuple[int, ...]


# -- configuration matrix --------------------------------------------------

@dataclass
class AMatrix:
    """Integer configuration matrix; columns index the coefficients c_j."""

    rows: List[List[int]]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) != 1:
            raise ValueError("ragged A matrix")
        if not self._ones_in_row_span():
            raise ValueError("(1,...,1) not in the row span of A")

    def _ones_in_row_span(self) -> bool:
        # rational solve: does some combination of rows give all ones?
        matrix = [[Fraction(self.rows[i][j]) for i in range(self.nrows)]
                  for j in range(self.ncols)]
        rhs = [Fraction(1)] * self.ncols
        try:
            solve_fraction_system(matrix, [ParamLinear.const(1)] * self.ncols)
        except (InconsistentPair, UnderdeterminedPair) as err:
            return not isinstance(err, InconsistentPair)
        return True

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def codim(self) -> int:
        return self.ncols - integer_rank(self.rows)

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.rows)


def toric_matrix(g: KPoly) -> Tuple[AMatrix, List[Mono]]:
    """A matrix of the support of g: first row all ones, then one row per
    integration variable.  Column order follows g's canonical term order."""
    expos = g.ordered_exponents()
    rows = [[1] * len(expos)]
    for i in range(g.nvars):
        rows.append([e[i] for e in expos])
    return AMatrix(rows), expos


# -- deformation -----------------------------------------------------------

@dataclass
class Deformation:
    applied: bool
    exponent: Optional[Mono] = None


def _cantaloupe_shape(g: KPoly) -> bool:
    """All products of (nvars-1) distinct variables plus the full product."""
    n = g.nvars
    expected = {tuple(0 if j == i else 1 for j in range(n)) for i in range(n)}
    expected.add((1,) * n)
    return set(g.terms) == expected


def deform(g: KPoly) -> Tuple[KPoly, Deformation]:
    """Insert an extra monomial when the configuration has codimension zero,
    so that the kernel lattice becomes nontrivial."""
    amat, _ = toric_matrix(g)
    if amat.codim() > 0:
        return g, Deformation(False)
    if _cantaloupe_shape(g) and g.nvars >= 3:
        loops = g.nvars - 1
        expo = tuple(1 if i < loops - 1 else 0 for i in range(g.nvars))
    else:
        expo = (0,) * g.nvars
    if expo in g.terms:
        raise DeformationFailed(f"deformation monomial {expo} already present")
    deformed = KPoly.monomial(g.nvars, expo, coeff_const(1)) + g
    return deformed, Deformation(True, expo)


# -- lattice and toric ideal ----------------------------------------------

def kernel_lattice(amat: AMatrix) -> List[Tuple[int, ...]]:
    return kernel_basis(amat.rows)


def _binomial(u: Sequence[int]) -> Poly:
    plus = tuple(max(x, 0) for x in u)
    minus = tuple(max(-x, 0) for x in u)
    if plus == minus:
        return {}
    return {plus: Fraction(1), minus: Fraction(-1)}


def toric_ideal(amat: AMatrix) -> List[Poly]:
    """Generators of I_A: the lattice-basis binomial ideal saturated at each
    variable in turn, returned as a reduced grevlex basis."""
    lattice = kernel_lattice(amat)
    gens = [_binomial(u) for u in lattice]
    gens = [g for g in gens if g]
    if not gens:
        return []
    saturated = saturate_all_variables(gens, amat.ncols)
    return interreduce(saturated, grevlex_key)


def binomial_exponents(basis: Sequence[Poly]) -> List[Tuple[Mono, Mono]]:
    """(u_plus, u_minus) pairs of a binomial basis (for display/tests)."""
    out = []
    for g in basis:
        if len(g) != 2:
            raise ValueError("basis element is not binomial")
        (m1, c1), (m2, _) = sorted(g.items(), key=lambda t: -t[1])
        out.append((m1, m2) if c1 > 0 else (m2, m1))
    return out


# -- initial ideal ---------------------------------------------------------

def initial_ideal(generators: Sequence[Poly], weight: Sequence[int],
                  require_strict: bool = False) -> List[Mono]:
    """Minimal generators of in_w(I) for the weight refined by grevlex.

    With require_strict the weight must single out the leading monomial on
    its own; a w-balanced basis element then raises NonGenericWeight instead
    of being silently tie-broken.
    """
    key = weighted_key(weight)
    basis = buchberger(list(generators), key)
    leads = []
    for g in basis:
        lm = leading_monomial(g, key)
        if require_strict:
            wlm = sum(w * e for w, e in zip(weight, lm))
            for m in g:
                if m != lm and sum(w * e for w, e in zip(weight, m)) == wlm:
                    raise NonGenericWeight(
                        f"weight {tuple(weight)} balances a basis element")
        leads.append(lm)
    return minimal_monomial_generators(leads)


def minimal_monomial_generators(monos: Sequence[Mono]) -> List[Mono]:
    out = []
    for m in sorted(set(monos), key=grevlex_key):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def monomial_ideal_contains(gens: Sequence[Mono], mono: Mono) -> bool:
    return any(mono_divides(g, mono) for g in gens)


# -- standard pairs --------------------------------------------------------

@dataclass(frozen=True)
class StandardPair:
    """A pair (root a, face F); indices in F are 0-based internally."""

    root: Mono
    face: Tuple[int, ...]

    def __str__(self) -> str:
        nvars = len(self.root)
        mono = "*".join(f"d{i + 1}" + (f"^{e}" if e > 1 else "")
                        for i, e in enumerate(self.root) if e) or "1"
        face = "{" + ",".join(str(i + 1) for i in self.face) + "}"
        return f"({mono}, {face})"


def standard_pairs(gens: Sequence[Mono], nvars: int) -> List[StandardPair]:
    """Standard pairs of a monomial ideal given by (minimal) generators.

    A pair (a, F) qualifies when a is supported off F, no generator divides
    any monomial of the form a + (exponents on F), and F is maximal with that
    property in every direction l not in F.  Divisibility makes each
    condition a finite check against the generators.
    """
    gens = minimal_monomial_generators(gens)
    if not gens:
        return [StandardPair((0,) * nvars, tuple(range(nvars)))]
    dmax = [max(g[i] for g in gens) for i in range(nvars)]
    forced = [i for i in range(nvars) if dmax[i] == 0]
    free = [i for i in range(nvars) if dmax[i] > 0]
    pairs = []
    for rbits in itertools.product((False, True), repeat=len(free)):
        face = tuple(sorted(forced + [i for i, b in zip(free, rbits) if b]))
        off = [i for i in free if i not in face]
        for avals in itertools.product(*(range(dmax[i]) for i in off)):
            a = [0] * nvars
            for i, v in zip(off, avals):
                a[i] = v
            if any(all(g[i] <= a[i] for i in off) for g in gens):
                continue  # some generator survives on the face: not standard
            if all(any(all(g[i] <= a[i] for i in off if i != l) for g in gens)
                   for l in off):
                pairs.append(StandardPair(tuple(a), face))
    pairs.sort(key=lambda p: (p.face, p.root))
    return pairs


# -- exponent vectors ------------------------------------------------------

@dataclass
class FakeExponent:
    components: Tuple[ParamLinear, ...]
    pair: StandardPair

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def solve_fraction_system(matrix: List[List[Fraction]],
                          rhs: List[ParamLinear]) -> List[ParamLinear]:
    """Solve matrix @ x = rhs exactly; the rhs carries symbolic parameters.

    Raises InconsistentPair if no solution exists for generic parameters and
    UnderdeterminedPair if the solution is not unique.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    mat = [list(row) for row in matrix]
    vec = list(rhs)
    pivots: List[Tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, nrows) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        vec[row], vec[pivot] = vec[pivot], vec[row]
        inv = Fraction(1) / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        vec[row] = vec[row] * inv
        for i in range(nrows):
            if i != row and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[row])]
                vec[i] = vec[i] - vec[row] * factor
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for i in range(row, nrows):
        if not vec[i].is_zero():
            raise InconsistentPair("no solution for generic parameters")
    if len(pivots) < ncols:
        raise UnderdeterminedPair("solution space is positive-dimensional")
    solution = [ParamLinear()] * ncols
    for r, c in pivots:
        solution[c] = vec[r]
    return solution


def fake_exponents(amat: AMatrix, kappa: Sequence[ParamLinear],
                   pairs: Sequence[StandardPair]) -> List[FakeExponent]:
    """Exponent vectors: theta_j pinned to the pair root off the face, the
    face components solved from A.theta = kappa.

    Pairs whose linear system is inconsistent are dropped with a warning; an
    underdetermined system aborts (the weight was too degenerate).
    """
    if len(kappa) != amat.nrows:
        raise ValueError("kappa length must match the number of A rows")
    out = []
    for pair in pairs:
        face = list(pair.face)
        matrix = [[Fraction(amat.rows[i][j]) for j in face]
                  for i in range(amat.nrows)]
        rhs = []
        for i in range(amat.nrows):
            value = kappa[i]
            for j in range(amat.ncols):
                if j not in pair.face and pair.root[j]:
                    value = value - ParamLinear.const(
                        amat.rows[i][j] * pair.root[j])
            rhs.append(value)
        try:
            solved = solve_fraction_system(matrix, rhs)
        except InconsistentPair:
            warnings.warn(f"discarding inconsistent standard pair {pair}")
            continue
        components = [ParamLinear.const(pair.root[j]) for j in
                      range(amat.ncols)]
        for j, value in zip(face, solved):
            components[j] = value
        out.append(FakeExponent(tuple(components), pair))
    return out


def standard_kappa(nvars: int) -> List[ParamLinear]:
    """kappa = (-beta, -a1, ..., -aN) for an integrand z^a g(z)^(-beta)."""
    return [-ParamLinear.param("beta")] + [
        -ParamLinear.param(f"a{i + 1}") for i in range(nvars)]
