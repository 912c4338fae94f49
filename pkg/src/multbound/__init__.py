"""Exact computation of graded Betti tables, Hilbert series, Koszul
homology, and multiplicity bounds for monomial ideals and Stanley-Reisner
rings."""

from .monomials import (
    INFINITY,
    BoundVector,
    Monomial,
    MonomialIdeal,
    ideal_from_json,
    ideal_to_json,
    is_squarefree_strongly_stable,
    is_stable,
    minimalize,
    monomials_of_degree,
    saturation_count,
    squarefree_strongly_stable_closure,
    stable_closure,
    strongly_stable_closure,
)
from .simplicial import (
    FVector,
    SimplicialComplex,
    complex_from_json,
    complex_of_ideal,
    complex_to_json,
    facet_duality_generators,
    polarize,
    stanley_reisner_ideal,
)
from .homology import (
    ExactMatrix,
    FiniteChainComplex,
    homology_dims,
    reduced_simplicial_homology,
)
from .hilbert import (
    HilbertSummary,
    annihilator_length,
    finite_length_colon,
    hilbert_function,
    numerator,
    numerator_inclusion_exclusion,
    summarize,
)
from .betti import (
    NEG_INFINITY,
    BettiTable,
    OracleCapError,
    ResolutionStats,
    betti_hochster,
    betti_oracle,
    betti_stable_formula,
    is_cohen_macaulay,
    is_componentwise_linear,
    regularity,
    stable_regularity,
    stats,
)
from .koszul import (
    KoszulStrandTable,
    ReductionReport,
    almost_regular_suffix,
    koszul_strands,
    reduction_report,
)
from .bounds import (
    BoundReport,
    CheckResult,
    check_dual_identities,
    evaluate_ideal,
)
from .campaign import CampaignConfig, CampaignError, run_campaign

__all__ = [name for name in dir() if not name.startswith("_")]
