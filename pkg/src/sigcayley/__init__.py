"""Signed Cayley graphs on Z_p x Z_n and exact checks of their properties."""

from .analysis import (
    BalanceReport,
    ClusterReport,
    CompatReport,
    CountPrediction,
    LineConditionReport,
    check_balance,
    check_clusterability,
    check_line_balance_conditions,
    check_sign_compatibility,
    predicted_counts,
)
from .arith import factorize, nonunit_runs, units
from .cayley import GroupSpec, build_sigraph, connection_set, family, validate_spec
from .errors import (
    DivisibilityError,
    GateError,
    InvalidInputError,
    InvalidPrimeError,
    NotApplicableError,
)
from .kernels import BACKEND
from .sigraph import (
    NEG,
    POS,
    Cycle,
    EdgeCounts,
    Sigraph,
    Sign,
    components,
    edge_counts,
    line_sigraph,
    neg_degree,
    to_dot,
)

__version__ = "0.1.0"
