"""Exact divisor calculus behind the classification of Gorenstein Fano
threefolds whose anticanonical system has base points.

Everything is integer arithmetic: linear-system dimensions and
intersection numbers on rational normal scrolls, Hirzebruch-surface
divisor classes, the elliptic-pencil lattice on the anticanonical K3,
weighted Hilbert series with Riemann-Roch counts, branch-divisor
degenerations of anticanonical double covers, blowup degree chains,
and the thirteen-case classification table that ties them together.
"""

from .blowup import (
    BlowupStep,
    NormalBundle,
    blowup_degree,
    cone_case_normal_bundle,
    decomposition_fiber_coeff,
    exceptional_surface_index,
    product_degree,
)
from .classify import (
    CaseVerdict,
    CheckResult,
    ClassificationCase,
    PruneKind,
    case_checks,
    cone_case,
    enumerate_cases,
    prune,
    verify_case,
)
from .cover import (
    BranchReport,
    DoubleCoverSpec,
    Verdict,
    analyze_cover,
    branch_for_taut_anticanonical,
    cover_degree,
)
from .errors import (
    ArityMismatch,
    CheckFailure,
    EmptySystem,
    FanobaseError,
    Inconsistent,
    IndexOutOfRange,
    InvalidDegree,
    InvalidM,
    NegativeDegree,
    NegativeTwist,
    NoSection,
    NonIntegralChi,
    NotEffectiveShape,
    NotElephantShape,
    NotRigid,
    OutOfRange,
    RankMismatch,
    SurfaceMismatch,
    TooFewSummands,
    WrongDimension,
    WrongRank,
    WrongSurface,
)
from .hirzebruch import (
    SurfaceClass,
    canonical_surface_class,
    forced_minimal_decomposition,
    from_scroll,
    genus,
    intersect2,
    minimal_section,
    to_scroll,
)
from .k3pencil import (
    PencilClass,
    base_locus_dimension,
    blowup_section_reduce,
    cover_pullback,
    dot,
    fano_degree,
    saint_donat_form,
    square,
)
from .report import Report, build_report
from .scroll import (
    INFINITE,
    DivisorClass,
    Scroll,
    canonical_class,
    fiber_multiplicity_at,
    fixed_component_multiplicity,
    h0,
    intersect,
    minimal_degree_data,
    monomial_support,
    restrict_to_subscroll,
)
from .wps import (
    WeightedCI,
    anticanonical_degree,
    hilbert_coeffs,
    infer_ring,
    rr_chi,
)

__version__ = "0.1.0"
