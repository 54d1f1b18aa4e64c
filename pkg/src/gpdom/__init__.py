"""Domination in generalized Petersen graphs P(n, k)."""

from .analysis import (
    AuditCheck,
    AuditReport,
    BoundTableRow,
    ColumnProfile,
    audit_lemmas,
    bound_table,
    bound_violations,
    column_profile,
    write_bound_csv,
)
from .bounds import ck_upper_bound, known_gamma, known_gamma_detail, p6k_size, prior_upper_bound
from .constructions import (
    CaseLabel,
    ConstructionReport,
    construct_ck,
    construct_efficient,
    construct_p6k,
)
from .exceptions import (
    InvalidParams,
    LemmaViolation,
    NotApplicable,
    NotFactored,
    TranscriptionError,
    UnsupportedParams,
)
from .graph import (
    Graph,
    PetersenParams,
    VertexId,
    VertexSet,
    build_petersen,
    closed_neighborhood,
    is_dominating,
    is_efficient_dominating,
    undominated_vertices,
)
from .solver import (
    SolveBudget,
    SolveReport,
    exact_gamma,
    exists_efficient,
    random_dominating_sets,
)

__version__ = "0.1.0"
