"""Exception types shared across the engine."""


class FeynGKZError(Exception):
    """Base class for all engine errors."""


class PoleError(FeynGKZError):
    """A Gamma factor or Pochhammer symbol was evaluated at a pole."""


class NonGenericWeight(FeynGKZError):
    """A weight vector left some Groebner binomial balanced (only raised
    when a strictly w-graded initial ideal was requested)."""


class InconsistentPair(FeynGKZError):
    """A standard pair leads to an unsolvable exponent system."""


class UnderdeterminedPair(FeynGKZError):
    """A standard pair leaves the exponent system underdetermined."""


class DimensionMismatch(FeynGKZError):
    """Input dimensions are incompatible."""


class SingularM(FeynGKZError):
    """The loop-momentum bilinear form has identically zero determinant."""


class DeformationFailed(FeynGKZError):
    """No admissible deformation monomial could be inserted."""


class NoZeroComponent(FeynGKZError):
    """An exponent vector has no vanishing component, so the Gamma-product
    prescription for its integration constant does not apply."""


class NonConvergent(FeynGKZError):
    """The numeric integrand fails the decay probe."""


class IllConditioned(FeynGKZError):
    """The linear solve for integration constants is too ill-conditioned."""


class DivergentArgument(FeynGKZError):
    """A series was evaluated outside its region of convergence."""
