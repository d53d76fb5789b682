"""r-domination and p-center approximations on unweighted graphs."""

from ._core import (
    BudgetExceeded,
    DominationResult,
    Error,
    Graph,
    InputError,
    InvariantViolation,
    PCenterResult,
    TreeDecomposition,
    VerifyReport,
    cluster_diameter,
    connected_rdom_lp,
    connected_rdom_td,
    exact_pcenter,
    exact_rdom,
    generate,
    layering_clusters,
    pcenter_lp,
    pcenter_td,
    rdom_lp,
    rdom_td,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
