"""Zeros of paraorthogonal polynomials on the unit circle, at desk scale.

Construct orthogonal and paraorthogonal polynomials from Verblunsky
coefficient sequences, locate all their zeros exactly through the monotone
phase lift, build the banded CMV truncations, and measure the gap around 1
that slowly decaying coefficients open up.
"""

from .cmv import (
    CMVOperator,
    EigenvalueBall,
    ResolventGapReport,
    SignPatternReport,
    TrialVector,
    apply,
    build_cmv,
    dense,
    eigenvalue_ball,
    gamma_n,
    m_minus_l,
    residual,
    resolvent_gap_check,
    sign_pattern_invertibility,
    trial_nu,
    trial_upsilon,
    write_dense_csv,
)
from .errors import (
    ConvergenceError,
    DomainError,
    PatternError,
    PoleError,
    PreconditionError,
)
from .measures import (
    CaratheodoryEvaluation,
    ScanReport,
    f0_boundary,
    gap_arc_regular,
    peherstorfer_F,
    pure_point_scan,
    write_scan_csv,
)
from .phase import (
    GapMeasurements,
    PhaseBoundReport,
    PhaseState,
    ZeroSet,
    blaschke_step,
    eta,
    gap_measurements,
    nearest_zero_to_one,
    phase_bound_check,
    phase_state,
    popuc_zeros,
    write_zeroset_csv,
    zeros_near_one,
    zeroset_to_json_dict,
)
from .szego import (
    PolynomialPair,
    SecondKindPair,
    evaluate,
    initial_pair,
    interior_roots,
    paraorthogonal,
    polynomials_upto,
    second_kind_upto,
    szego_step,
    write_coefficients_csv,
)
from .verblunsky import (
    DecayProfile,
    RegionP,
    SlowDecayReport,
    VerblunskySequence,
    in_region_P,
    sample_region_P,
    theta_alpha,
    validate_slow_decay,
)

__version__ = "0.1.0"
