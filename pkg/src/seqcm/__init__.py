"""Local cohomology profiles, dimension filtrations and relative Cohen-Macaulay
verdicts for monomial ideals in a bigraded polynomial ring ``K[x_1..x_m, y_1..y_n]``."""

from .cech import CohomologyProfile, QuotientModule, cohomology_profile, profile_of
from .combinatorics import (
    GeneralMonomialIdeal,
    MonomialPrime,
    RingSpec,
    SquarefreeIdeal,
    minimal_primes,
)
from .filtration import (
    TheoremViolation,
    classify,
    cm_invariant_report,
    dimension_filtration,
    unmixed_component,
)
from .homology import depth_dim_oracle
from .linalg import GF2, QQ, FieldSpec, StructuralError

__version__ = "0.1.0"

__all__ = [
    "CohomologyProfile", "FieldSpec", "GF2", "GeneralMonomialIdeal", "MonomialPrime", "QQ",
    "QuotientModule", "RingSpec", "SquarefreeIdeal", "StructuralError", "TheoremViolation",
    "classify", "cm_invariant_report", "cohomology_profile", "depth_dim_oracle",
    "dimension_filtration", "minimal_primes", "profile_of", "unmixed_component",
]
