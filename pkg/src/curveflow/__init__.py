"""Plane-curve toolkit for the curve shortening flow.

Discrete closed curves, Minkowski support functions, self-shrinker
verification, explicit flow stepping, Bonnesen inequality machinery, and
Gage's equal-area-chord symmetrization; together they reproduce the numerical
evidence that the circle is the only closed embedded contracting homothetic
solution of the flow.
"""

from .bonnesen import (
    BonnesenReport,
    bonnesen_chain,
    bonnesen_roots,
    circumradius,
    inradius,
    minimal_enclosing_circle,
)
from .curves import (
    ClosedCurve,
    FrenetData,
    build_closed_curve,
    centroid,
    is_convex,
    is_simple,
    length,
    read_curve_csv,
    recenter_to_centroid,
    resample_arclength,
    signed_area,
    signed_curvature,
    turning_number,
    winding_number,
    write_curve_csv,
)
from .errors import (
    BlowUp,
    CurveCollapsed,
    CurveFlowError,
    DegenerateSegment,
    IsoperimetricViolation,
    NotAnOval,
    NotAShrinker,
    NotConvex,
    NotConvexAfterGluing,
    NotSymmetric,
    OriginOutside,
    StepTooLarge,
    ToleranceNotMet,
    TooFewPoints,
    TooFewSamples,
)
from .flow import (
    FlowState,
    FlowTrajectory,
    SimilarityProfile,
    area_decay_check,
    csf_step,
    rescaled_flow,
    run_flow,
    stability_bound,
    suggested_dt,
    write_curve_svg,
)
from .shrinker import (
    ClassificationReport,
    OdeTrajectory,
    ShrinkerReport,
    classify_closed_solutions,
    fundamental_residual,
    gauge_constant,
    integrate_support_ode,
    ode_energy,
    period_by_quadrature,
    shoot_period,
    verify_shrinker,
)
from .support import (
    SupportFunction,
    WidthFunction,
    area_from_support,
    cauchy_length,
    curvature_from_support,
    curve_from_support,
    read_support_csv,
    support_from_curve,
    width,
    write_support_csv,
)
from .symmetrize import (
    ChordCut,
    SymmetrizedPair,
    SymmetricShrinkerReport,
    chord_cut,
    find_bisecting_chord,
    symmetric_shrinker_check,
    symmetrize,
)

__version__ = "0.1.0"
