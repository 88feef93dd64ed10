"""Symbolic-numeric evaluation of Euler-Mellin integrals as canonical
A-hypergeometric series, with a quadrature oracle for validation."""

from .constants import (SolutionBundle, deformation_limit_probe,
                        gamma_constant, numeric_constants)
from .errors import (DeformationFailed, DimensionMismatch, DivergentArgument,
                     FeynGKZError, IllConditioned, InconsistentPair,
                     NoZeroComponent, NonConvergent, NonGenericWeight,
                     PoleError, SingularM, UnderdeterminedPair)
from .gammafn import GammaFactor, gamma_signed, log_gamma_signed
from .gkz import (AMatrix, FakeExponent, StandardPair, deform, fake_exponents,
                  initial_ideal, kernel_lattice, standard_kappa,
                  standard_pairs, toric_ideal, toric_matrix)
from .graphs import GraphSpec, Propagator, assemble_mqj, prefactor, symanzik
from .kpoly import KPoly
from .params import ParamLinear
from .pipeline import ProblemSpec, ResultReport, run
from .pochhammer import PochhammerProduct, poch_numeric
from .quadrature import QuadratureResult, QuadratureSpec, quadrature
from .series import CanonicalSeries, HypergeometricForm, term_coefficient

from .fixtures import fixtures

__version__ = "0.1.0"
