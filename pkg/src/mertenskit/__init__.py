"""Mobius/Mertens identity toolkit.

Layers: arith (sieves, quotient blocks), sequences (prefix evaluators
and the sublinear Mertens recursion), identities (residual checks for
the square/truncation family), gamma (Euler-gamma estimator), induction
(sup-bound step sweeps), cli (reports).
"""

from .arith import (
    MobiusTable,
    QuotientBlocks,
    mobius_segment,
    mobius_sieve,
    nested_floor_check,
    primes_up_to,
    quotient_blocks,
)
from .config import CapacityError, DEFAULT_TOLERANCE, memory_budget
from .exact import ExactRational, ScaledSums, lcm_upto
from .gamma import GammaEstimate, GammaStudy, gamma_convergence_study, gamma_series
from .identities import (
    ConvolutionCoefficients,
    Identity,
    IdentityCase,
    Residual,
    convolution_coeffs,
    verify_case,
    verify_eq1,
    verify_eq2,
    verify_eq3,
    verify_eq5,
    verify_eq6,
    verify_eq7,
    verify_eq11,
    verify_eq12,
    verify_eq13,
    verify_eq15,
    verify_eq16,
    verify_eq17,
    verify_eq18,
)
from .induction import (
    BoundParams,
    InductionReport,
    InductionRow,
    SupRecord,
    check_induction_step,
    double_sum_cross_check,
    induction_sweep,
    mertens_square_table,
    minimal_constant,
    square_sum_comparison,
    sup_mertens,
)
from .sequences import (
    EULER_GAMMA,
    ExactModeError,
    OscillatoryValue,
    RationalBoundError,
    SequenceCache,
    harmonic,
    harmonic_asymptotic,
    mertens_sublinear,
    mertens_value,
    oscillatory,
)

__version__ = "0.1.0"
